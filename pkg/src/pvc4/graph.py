"""Undirected simple graph with the structural queries the solver needs.

Vertex ids are non-negative integers. Ids are never renumbered: deleting
vertices leaves the remaining ids untouched, so vertex sets computed on a
derived graph are directly meaningful on the original one. Every helper
that has to "pick" a vertex scans in ascending id order, which makes all
higher-level searches deterministic.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional


class Graph:
    """Adjacency-set graph: symmetric, no self-loops, no parallel edges."""

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        self._adj: dict[int, set[int]] = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_vertex(u)
            self.add_vertex(v)
            self.add_edge(u, v)

    # -- construction / mutation ------------------------------------------

    def add_vertex(self, v: int) -> None:
        if v < 0:
            raise ValueError(f"vertex ids must be non-negative, got {v}")
        self._adj.setdefault(v, set())

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        self._require(u)
        self._require(v)
        self._adj[u].add(v)
        self._adj[v].add(u)

    def delete_edge(self, u: int, v: int) -> None:
        self._require(u)
        self._require(v)
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        return g

    # -- basic queries ------------------------------------------------------

    def _require(self, v: int) -> None:
        if v not in self._adj:
            raise ValueError(f"unknown vertex id {v}")

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    @property
    def num_vertices(self) -> int:
        return len(self._adj)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (min, max) pairs, ascending."""
        return sorted((min(u, v), max(u, v)) for u in self._adj for v in self._adj[u] if u < v)

    def neighbors(self, v: int) -> set[int]:
        self._require(v)
        return set(self._adj[v])

    def adj(self, v: int) -> set[int]:
        """Internal view of a neighbor set; callers must not mutate it."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._require(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighborhood_of_set(self, s: Iterable[int]) -> set[int]:
        """N(S): union of the neighborhoods of S, minus S itself."""
        s = set(s)
        out: set[int] = set()
        for v in s:
            self._require(v)
            out |= self._adj[v]
        return out - s

    # -- derived graphs -----------------------------------------------------

    def induced_subgraph(self, s: Iterable[int]) -> "Graph":
        s = set(s)
        g = Graph()
        g._adj = {v: self._adj[v] & s for v in s}  # KeyError on unknown ids
        return g

    def delete_vertices(self, s: Iterable[int]) -> "Graph":
        s = set(s)
        return self.induced_subgraph(set(self._adj) - s)

    # -- structure ----------------------------------------------------------

    def connected_components(self) -> list[tuple[int, ...]]:
        """Maximal connected vertex sets as sorted tuples, ordered by min id."""
        adj = self._adj
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for start in sorted(adj):
            if start in seen:
                continue
            seen.add(start)
            comp = [start]
            frontier = [start]
            while frontier:
                v = frontier.pop()
                for u in adj[v]:
                    if u not in seen:
                        seen.add(u)
                        comp.append(u)
                        frontier.append(u)
            comp.sort()
            comps.append(tuple(comp))
        return comps

    def has_4path(self) -> bool:
        """True iff some simple path on 4 distinct vertices exists.

        A 4-path a,u,v,b exists iff some edge (u,v) admits a in N(u)-{v}
        and b in N(v)-{u,a}; the pair condition is symmetric in the two
        endpoints, so each edge is tested once.
        """
        adj = self._adj
        for u in adj:
            au = adj[u]
            la = len(au) - 1
            if la < 0:
                continue
            for v in au:
                if u > v:
                    continue
                if la == 0:
                    break
                lb = len(adj[v]) - 1
                if lb == 0:
                    continue
                if la >= 2 or lb >= 2:
                    return True
                # one candidate on each side; a 4-path needs them distinct
                a = next(w for w in au if w != v)
                b = next(w for w in adj[v] if w != u)
                if a != b:
                    return True
        return False

    def find_4path(self) -> Optional[tuple[int, int, int, int]]:
        """First 4-path (a,u,v,b) in canonical order, or None.

        Scan order: middle edges ascending by (min id, max id), then the two
        orientations of the edge, then smallest a, then smallest b.
        """
        adj = self._adj
        for p, q in self.edges():
            for u, v in ((p, q), (q, p)):
                a_side = adj[u] - {v}
                if not a_side:
                    continue
                b_side = adj[v] - {u}
                if not b_side:
                    continue
                b_best = sorted(b_side)[:2]
                for a in sorted(a_side):
                    for b in b_best:
                        if b != a:
                            return (a, u, v, b)
        return None

    def is_star(self) -> Optional[int]:
        """Center of this graph if it is a star (assumes connectivity).

        A star has at least 3 vertices, one adjacent to all others, and no
        other edges. Returns None otherwise.
        """
        n = len(self._adj)
        if n < 3:
            return None
        for v in sorted(self._adj):
            if len(self._adj[v]) == n - 1:
                if all(len(self._adj[u]) == 1 for u in self._adj if u != v):
                    return v
        return None

    def is_triangle(self) -> bool:
        return len(self._adj) == 3 and all(len(nbrs) == 2 for nbrs in self._adj.values())

    def is_independent_set(self, s: Iterable[int]) -> bool:
        s = set(s)
        for v in s:
            self._require(v)
        return all(not (self._adj[v] & s) for v in s)

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.num_vertices}, m={self.num_edges})"


def pack_4paths(g: Graph, removed: set[int] = frozenset()) -> int:
    """Greedy count of vertex-disjoint 4-paths in g minus `removed`.

    Any 4-path vertex cover needs one distinct vertex per packed path, so
    the count lower-bounds the cover size (it also lower-bounds disjoint
    covers: a path avoiding the forbidden side entirely cannot exist when
    the forbidden side is 4-path-free).
    """
    used = set(removed)
    count = 0
    adj = g._adj
    for u in sorted(adj):
        if u in used:
            continue
        for v in sorted(adj[u]):
            if v < u or v in used:
                continue
            a_side = adj[u] - used
            a_side.discard(v)
            b_side = adj[v] - used
            b_side.discard(u)
            hit = None
            for a in a_side:
                for b in b_side:
                    if a != b:
                        hit = (a, b)
                        break
                if hit:
                    break
            if hit:
                used.update((hit[0], u, v, hit[1]))
                count += 1
                break
    return count


def has_4path_avoiding(g: Graph, removed: set[int]) -> bool:
    """True iff g minus `removed` still contains a 4-path.

    Equivalent to g.delete_vertices(removed).has_4path() without building
    the reduced graph; this is the hot loop of cover verification.
    """
    adj = g._adj
    for u in adj:
        if u in removed:
            continue
        au = adj[u]
        for v in au:
            if u > v or v in removed:
                continue
            la = 0
            aw = -1
            for w in au:
                if w != v and w not in removed:
                    la += 1
                    aw = w
                    if la == 2:
                        break
            if la == 0:
                continue
            lb = 0
            bw = -1
            for w in adj[v]:
                if w != u and w not in removed:
                    lb += 1
                    bw = w
                    if lb == 2:
                        break
            if lb == 0:
                continue
            if la == 2 or lb == 2 or aw != bw:
                return True
    return False
