"""State of the disjoint problem: a graph, a forbidden vertex set, a budget.

The forbidden set ``v1`` is a 4-path vertex cover of the graph that the
solution must avoid; ``v2`` is everything else. All the structural queries
the reduction rules rely on (connection vertices, leaves, split/contained
components, boundary vertices) live here.

Instances are treated as immutable: the solver derives children through
``remove_vertices`` / ``move_to_v1`` / ``delete_edge``, which copy. Derived
constructors skip revalidation; the metamorphic test suite checks that every
rule action preserves the invariants instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InvalidInstanceError, InvariantViolation
from .graph import Graph

CONNECTION = "connection"
LEAF = "leaf"
OTHER = "other"


@dataclass(frozen=True)
class ConnectionProfile:
    """Counts of the 2-components around one connection vertex.

    s1/s2 count contained components of size 1/2; t1/t2 count split
    components meeting N(x) in exactly one / at least two vertices.
    """

    s1: int
    s2: int
    t1: int
    t2: int
    contained_list: tuple[tuple[int, ...], ...]
    split_list: tuple[tuple[int, ...], ...]


class Instance:
    __slots__ = ("graph", "v1", "k", "_cache")

    def __init__(self, graph: Graph, v1: Iterable[int], k: int, _validate: bool = True):
        self.graph = graph
        self.v1 = frozenset(v1)
        self.k = int(k)
        self._cache: dict = {}
        if _validate:
            for v in self.v1:
                if v not in graph:
                    raise InvalidInstanceError(f"forbidden vertex {v} is not in the graph")
            if graph.induced_subgraph(self.v1).has_4path():
                raise InvalidInstanceError(
                    "forbidden set induces a 4-path; no disjoint cover can exist"
                )
            if graph.delete_vertices(self.v1).has_4path():
                raise InvalidInstanceError(
                    "forbidden set is not a 4-path vertex cover of the graph"
                )

    # -- basic views ----------------------------------------------------------

    @property
    def v2(self) -> frozenset[int]:
        got = self._cache.get("v2")
        if got is None:
            got = frozenset(self.graph._adj) - self.v1
            self._cache["v2"] = got
        return got

    def v2_sorted(self) -> list[int]:
        got = self._cache.get("v2_sorted")
        if got is None:
            got = sorted(self.v2)
            self._cache["v2_sorted"] = got
        return got

    def with_budget(self, k: int) -> "Instance":
        inst = Instance(self.graph, self.v1, k, _validate=False)
        inst._cache = self._cache
        return inst

    def has_4path(self) -> bool:
        return any(self.graph_component_4path_flags()[1])

    def graph_components(self) -> list[tuple[int, ...]]:
        return self.graph_component_4path_flags()[0]

    def graph_component_4path_flags(self) -> tuple[list[tuple[int, ...]], list[bool]]:
        """Connected components of the whole graph plus, per component,
        whether it contains a 4-path; one fused traversal feeds rules 1-4.
        """
        got = self._cache.get("gcomps4p")
        if got is None:
            adj = self.graph._adj
            seen: set[int] = set()
            comps: list[tuple[int, ...]] = []
            flags: list[bool] = []
            for start in sorted(adj):
                if start in seen:
                    continue
                seen.add(start)
                comp = [start]
                frontier = [start]
                has4 = False
                while frontier:
                    v = frontier.pop()
                    av = adj[v]
                    la = len(av) - 1
                    for u in av:
                        if u not in seen:
                            seen.add(u)
                            comp.append(u)
                            frontier.append(u)
                        if has4 or u < v:
                            continue
                        if la == 0:
                            continue
                        lb = len(adj[u]) - 1
                        if lb == 0:
                            continue
                        if la >= 2 or lb >= 2:
                            has4 = True
                        else:
                            a = next(w for w in av if w != u)
                            b = next(w for w in adj[u] if w != v)
                            if a != b:
                                has4 = True
                comp.sort()
                comps.append(tuple(comp))
                flags.append(has4)
            got = (comps, flags)
            self._cache["gcomps4p"] = got
        return got

    # -- degree / neighborhood filters ----------------------------------------

    def n1(self, v: int) -> set[int]:
        return self.graph.adj(v) & self.v1

    def n2(self, v: int) -> set[int]:
        return self.graph.adj(v) - self.v1

    def _deg1_map(self) -> dict[int, int]:
        got = self._cache.get("deg1")
        if got is None:
            v1 = self.v1
            got = {
                v: sum(1 for w in nbrs if w in v1)
                for v, nbrs in self.graph._adj.items()
            }
            self._cache["deg1"] = got
        return got

    def deg1(self, v: int) -> int:
        return self._deg1_map()[v]

    def deg2(self, v: int) -> int:
        return len(self.graph._adj[v]) - self._deg1_map()[v]

    def n_i(self, v: int, i: int) -> set[int]:
        self._check_side(i)
        return self.n1(v) if i == 1 else self.n2(v)

    def deg_i(self, v: int, i: int) -> int:
        self._check_side(i)
        return self.deg1(v) if i == 1 else self.deg2(v)

    @staticmethod
    def _check_side(i: int) -> None:
        if i not in (1, 2):
            raise ValueError(f"side must be 1 or 2, got {i}")

    # -- vertex classification --------------------------------------------------

    def classify_v1_vertex(self, x: int) -> str:
        if x not in self.v1:
            raise ValueError(f"vertex {x} is not in the forbidden set")
        if self.deg1(x) != 0:
            return OTHER
        d2 = self.deg2(x)
        if d2 >= 2:
            return CONNECTION
        if d2 == 1:
            return LEAF
        return OTHER

    def is_connection(self, x: int) -> bool:
        if x not in self.v1:
            return False
        d1 = self._deg1_map()[x]
        return d1 == 0 and len(self.graph._adj[x]) >= 2

    def is_leaf(self, x: int) -> bool:
        if x not in self.v1:
            return False
        d1 = self._deg1_map()[x]
        return d1 == 0 and len(self.graph._adj[x]) == 1

    def connection_vertices(self) -> list[int]:
        got = self._cache.get("connections")
        if got is None:
            got = [x for x in sorted(self.v1) if self.is_connection(x)]
            self._cache["connections"] = got
        return got

    def adjacent_connections(self, v: int) -> list[int]:
        """Connection vertices adjacent to v, ascending."""
        return sorted(x for x in self.graph._adj[v] if self.is_connection(x))

    def adjacent_to_leaf(self, v: int) -> bool:
        v1 = self.v1
        return any(self.is_leaf(y) for y in self.graph._adj[v] if y in v1)

    # -- i-components -------------------------------------------------------------

    def components_i(self, i: int) -> list[tuple[int, ...]]:
        self._check_side(i)
        key = f"comps{i}"
        got = self._cache.get(key)
        if got is None:
            side = self.v1 if i == 1 else self.v2
            adj = self.graph._adj
            seen: set[int] = set()
            got = []
            for start in sorted(side):
                if start in seen:
                    continue
                seen.add(start)
                comp = [start]
                frontier = [start]
                while frontier:
                    v = frontier.pop()
                    for u in adj[v]:
                        if u in side and u not in seen:
                            seen.add(u)
                            comp.append(u)
                            frontier.append(u)
                comp.sort()
                got.append(tuple(comp))
            self._cache[key] = got
        return got

    def v2_component_of(self, v: int) -> tuple[int, ...]:
        got = self._cache.get("comp2_of")
        if got is None:
            got = {}
            for comp in self.components_i(2):
                for u in comp:
                    got[u] = comp
            self._cache["comp2_of"] = got
        return got[v]

    # -- contained / split relations -----------------------------------------------

    def contains(self, x: int, comp: Iterable[int]) -> bool:
        nbrs = self.graph.adj(x)
        return all(v in nbrs for v in comp)

    def splits(self, x: int, comp: Iterable[int]) -> bool:
        comp = tuple(comp)
        nbrs = self.graph.adj(x)
        inside = sum(1 for v in comp if v in nbrs)
        return 0 < inside < len(comp)

    def _comp_relations(self, x: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
        """(split, contained) 2-components around connection vertex x."""
        key = ("rel", x)
        got = self._cache.get(key)
        if got is None:
            split: list[tuple[int, ...]] = []
            contained: list[tuple[int, ...]] = []
            nbrs = self.graph.adj(x)
            seen: set[tuple[int, ...]] = set()
            for v in sorted(nbrs):
                comp = self.v2_component_of(v)
                if comp in seen:
                    continue
                seen.add(comp)
                if all(u in nbrs for u in comp):
                    contained.append(comp)
                else:
                    split.append(comp)
            split.sort(key=lambda c: c[0])
            contained.sort(key=lambda c: c[0])
            got = (split, contained)
            self._cache[key] = got
        return got

    def split_components(self, x: int) -> list[tuple[int, ...]]:
        return self._comp_relations(x)[0]

    def contained_components(self, x: int) -> list[tuple[int, ...]]:
        return self._comp_relations(x)[1]

    def boundary_vertex(self, x: int, comp: Iterable[int]) -> int:
        """The unique vertex of a split 2-component outside N(x) with a
        2-side neighbor inside N(x).

        Uniqueness holds once the first ten reduction rules are exhausted;
        a miss here means the rule engine applied things out of order.
        """
        nbrs = self.graph.adj(x)
        candidates = [
            v for v in comp
            if v not in nbrs and (self.n2(v) & nbrs)
        ]
        if len(candidates) != 1:
            raise InvariantViolation(
                f"boundary vertex of {tuple(comp)} w.r.t. {x} is not unique: {candidates}"
            )
        return candidates[0]

    def sb(self, x: int) -> frozenset[int]:
        """Boundary vertices of every 2-component split by x."""
        return frozenset(self.boundary_vertex(x, comp) for comp in self.split_components(x))

    def sc(self, x: int) -> frozenset[int]:
        """One vertex (lowest id) per size-2 component contained in x."""
        return frozenset(
            comp[0] for comp in self.contained_components(x) if len(comp) == 2
        )

    def connection_profile(self, x: int) -> ConnectionProfile:
        split, contained = self._comp_relations(x)
        nbrs = self.graph.adj(x)
        s1 = sum(1 for c in contained if len(c) == 1)
        s2 = sum(1 for c in contained if len(c) == 2)
        t1 = sum(1 for c in split if sum(1 for v in c if v in nbrs) == 1)
        t2 = sum(1 for c in split if sum(1 for v in c if v in nbrs) >= 2)
        return ConnectionProfile(s1, s2, t1, t2, tuple(contained), tuple(split))

    # -- star helpers over 2-components ---------------------------------------------

    def v2_component_center(self, comp: tuple[int, ...]) -> Optional[int]:
        """Center if the 2-component is a star, else None."""
        if len(comp) < 3:
            return None
        comp_set = set(comp)
        for v in comp:
            if self.n2(v) & comp_set == comp_set - {v}:
                if all(len(self.n2(u) & comp_set) == 1 for u in comp if u != v):
                    return v
        return None

    def v2_component_is_triangle(self, comp: tuple[int, ...]) -> bool:
        if len(comp) != 3:
            return False
        comp_set = set(comp)
        return all(len(self.n2(v) & comp_set) == 2 for v in comp)

    # -- derived instances ---------------------------------------------------------

    def remove_vertices(self, s: Iterable[int], new_k: int) -> "Instance":
        s = set(s)
        return Instance(self.graph.delete_vertices(s), self.v1 - s, new_k, _validate=False)

    def move_to_v1(self, v: int) -> "Instance":
        return Instance(self.graph, self.v1 | {v}, self.k, _validate=False)

    def delete_edge(self, u: int, v: int) -> "Instance":
        g = self.graph.copy()
        g.delete_edge(u, v)
        return Instance(g, self.v1, self.k, _validate=False)

    def check_invariants(self) -> None:
        """Revalidate the construction contract (used by tests)."""
        Instance(self.graph, self.v1, self.k)

    def __repr__(self) -> str:
        return (
            f"Instance(n={self.graph.num_vertices}, |v1|={len(self.v1)}, "
            f"|v2|={len(self.v2)}, k={self.k})"
        )
