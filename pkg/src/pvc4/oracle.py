"""Brute-force ground truth. Deliberately dumb; the solver is tested against it.

Subsets are enumerated by ascending size and lexicographically within each
size, so the reported witness is canonical and the search stops as soon as
the minimum size is reached.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph, has_4path_avoiding
from .instance import Instance

MAX_ORACLE_VERTICES = 20


@dataclass(frozen=True)
class OracleAnswer:
    min_size: int
    witness: frozenset[int]


def _min_cover(graph: Graph, pool: list[int]) -> OracleAnswer:
    for size in range(len(pool) + 1):
        for cand in combinations(pool, size):
            if not has_4path_avoiding(graph, set(cand)):
                return OracleAnswer(size, frozenset(cand))
    raise AssertionError("removing the whole pool must succeed")


def brute_min_pvc4(graph: Graph) -> OracleAnswer:
    """Minimum 4-path vertex cover by exhaustive subset enumeration."""
    if graph.num_vertices > MAX_ORACLE_VERTICES:
        raise ValueError(
            f"oracle guard: {graph.num_vertices} vertices exceeds {MAX_ORACLE_VERTICES}"
        )
    return _min_cover(graph, graph.vertices())


def brute_min_disjoint(inst: Instance) -> OracleAnswer:
    """Minimum cover avoiding the forbidden set, same enumeration over V2 only."""
    pool = inst.v2_sorted()
    if len(pool) > MAX_ORACLE_VERTICES:
        raise ValueError(f"oracle guard: |V2|={len(pool)} exceeds {MAX_ORACLE_VERTICES}")
    if has_4path_avoiding(inst.graph, set(pool)):
        raise ValueError("forbidden set is not a cover; instance is malformed")
    return _min_cover(inst.graph, pool)


def enumerate_labeled_graphs(n: int, max_n: int = 6) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on vertices 0..n-1, ascending edge mask."""
    if n > max_n:
        raise ValueError(f"enumeration guard: n={n} exceeds {max_n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Graph(vertices=range(n), edges=edges)
