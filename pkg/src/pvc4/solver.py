"""Search drivers: disjoint branch-and-reduce, iterative compression, minimization.

``solve_disjoint`` runs the rule engine depth-first. Branch children whose
set exceeds the remaining budget are pruned without visiting (they would be
immediate budget failures), so a node whose branches are all pruned is a
"no" leaf. ``iterative_compression`` lifts the disjoint solver to the full
problem; ``minimize`` wraps the decision procedure.

Concurrency contract: branches of a node are independent subproblems over
immutable instance snapshots and could be evaluated concurrently with
associative stats merging; this module implements the sequential
first-branch-wins schedule, which is the reference semantics.
"""

from __future__ import annotations

import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from .errors import InvalidInstanceError, InvariantViolation, NodeBudgetExceeded
from .graph import Graph, has_4path_avoiding, pack_4paths
from .instance import Instance
from .rules import Branch, Reduce, RuleMatch, RuleOutcome, Terminal, select_rule

DEFAULT_NODE_CAP = 10**8

sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))


@dataclass
class SolveStats:
    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    rule_fires: Counter = field(default_factory=Counter)
    elapsed: float = 0.0

    def merge(self, other: "SolveStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.max_depth = max(self.max_depth, other.max_depth)
        self.rule_fires.update(other.rule_fires)
        self.elapsed += other.elapsed


@dataclass
class CoverResult:
    cover: Optional[frozenset[int]]
    stats: SolveStats

    @property
    def feasible(self) -> bool:
        return self.cover is not None


NodeHook = Callable[[int, RuleMatch, RuleOutcome], None]

# thresholds for the structural facts that hold once low rules are exhausted:
# rule id after which each observation must hold at every node
_OBSERVATION_THRESHOLDS = (8, 9, 10, 18, 20)


def _check_observations(inst: Instance, rule_id: int) -> None:
    if rule_id >= 8:
        for x in inst.connection_vertices():
            if inst.deg2(x) == 2:
                continue
            for v in inst.graph.adj(x):
                if inst.n1(v) != {x}:
                    raise InvariantViolation(
                        f"connection vertex {x} has degree {inst.deg2(x)} but "
                        f"neighbor {v} has other forbidden neighbors"
                    )
    if rule_id >= 9:
        for x in inst.v1:
            if inst.deg1(x):
                raise InvariantViolation(f"forbidden set not independent at {x}")
    if rule_id >= 10:
        for v in inst.v2_sorted():
            if len(inst.adjacent_connections(v)) > 1:
                raise InvariantViolation(f"vertex {v} touches two connection vertices")
    if rule_id >= 18:
        for x in inst.connection_vertices():
            if len(inst.split_components(x)) < 2:
                raise InvariantViolation(f"connection vertex {x} splits fewer than 2 components")
    if rule_id >= 20:
        for x in inst.connection_vertices():
            for comp in inst.split_components(x):
                center = inst.v2_component_center(comp)
                if center is None or inst.boundary_vertex(x, comp) != center:
                    raise InvariantViolation(
                        f"split component {comp} is not a star centered at its boundary"
                    )
                if inst.deg1(center):
                    raise InvariantViolation(f"split star center {center} has forbidden neighbors")


class _Search:
    __slots__ = ("stats", "node_cap", "check_observations", "on_node")

    def __init__(self, node_cap: int, check_observations: bool, on_node: Optional[NodeHook]):
        self.stats = SolveStats()
        self.node_cap = node_cap
        self.check_observations = check_observations
        self.on_node = on_node

    def run(self, inst: Instance, depth: int) -> Optional[frozenset[int]]:
        stats = self.stats
        stats.nodes += 1
        if stats.nodes > self.node_cap:
            raise NodeBudgetExceeded(f"search exceeded {self.node_cap} nodes")
        if depth > stats.max_depth:
            stats.max_depth = depth

        match, outcome = select_rule(inst)
        stats.rule_fires[match.rule_id] += 1
        if self.check_observations:
            _check_observations(inst, match.rule_id)
        if self.on_node is not None:
            self.on_node(depth, match, outcome)

        if isinstance(outcome, Terminal):
            stats.leaves += 1
            return frozenset() if outcome.answer else None
        if isinstance(outcome, Reduce):
            return self.run(outcome.next, depth + 1)

        visited = 0
        for taken in outcome.branches:
            if len(taken) > inst.k:
                continue
            visited += 1
            child = inst.remove_vertices(taken, inst.k - len(taken))
            sub = self.run(child, depth + 1)
            if sub is not None:
                return taken | sub
        if visited == 0:
            stats.leaves += 1
        return None


def solve_disjoint(
    inst: Instance,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    check_observations: bool = False,
    on_node: Optional[NodeHook] = None,
) -> CoverResult:
    """Decide whether a cover of size <= inst.k avoiding inst.v1 exists.

    Returns the first cover found under the deterministic branch order, or
    None. The cover is verified before returning.
    """
    search = _Search(node_cap, check_observations, on_node)
    start = time.perf_counter()
    cover = search.run(inst, 0)
    search.stats.elapsed = time.perf_counter() - start
    if cover is not None:
        if len(cover) > inst.k or (cover & inst.v1):
            raise InvariantViolation("solver produced an out-of-contract cover")
        if not verify_cover(inst.graph, cover):
            raise InvariantViolation("solver produced a non-covering vertex set")
    return CoverResult(cover, search.stats)


def verify_cover(graph: Graph, cover: Iterable[int]) -> bool:
    """True iff deleting the given vertices leaves no 4-path."""
    cover = set(cover)
    for v in cover:
        if v not in graph:
            raise ValueError(f"unknown vertex id {v}")
    return not has_4path_avoiding(graph, cover)


DisjointSink = Callable[[int, SolveStats], None]


def iterative_compression(
    graph: Graph,
    k: int,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    check_observations: bool = False,
    disjoint_stats_sink: Optional[DisjointSink] = None,
) -> CoverResult:
    """Decide whether the graph has a 4-path vertex cover of size <= k.

    Vertices are inserted in ascending id order while a cover of the
    processed subgraph is maintained; whenever it would overflow to k+1
    vertices, every subset of the overflowing cover is tried as the part to
    keep and the rest is handed to the disjoint solver.
    """
    if k < 0:
        raise ValueError(f"budget must be non-negative, got {k}")

    total = SolveStats()

    def run_disjoint(inst: Instance) -> Optional[frozenset[int]]:
        result = solve_disjoint(
            inst, node_cap=node_cap, check_observations=check_observations
        )
        total.merge(result.stats)
        if disjoint_stats_sink is not None:
            disjoint_stats_sink(inst.k, result.stats)
        return result.cover

    start = time.perf_counter()
    cover: frozenset[int] = frozenset()
    processed: set[int] = set()
    answer: Optional[frozenset[int]] = None
    for v in graph.vertices():
        processed.add(v)
        sub = graph.induced_subgraph(processed)
        if not has_4path_avoiding(sub, set(cover)):
            continue
        overflow = cover | {v}
        if len(overflow) <= k:
            cover = overflow
            continue
        # compression: overflow has k+1 vertices and covers the subgraph
        if pack_4paths(sub) > k:
            # a vertex-disjoint path packing already certifies infeasibility
            answer = None
            break
        compressed = _compress(sub, overflow, k, run_disjoint)
        if compressed is None:
            answer = None
            break
        cover = compressed
    else:
        answer = cover

    total.elapsed = time.perf_counter() - start
    if answer is not None:
        if len(answer) > k or not verify_cover(graph, answer):
            raise InvariantViolation("compression produced an invalid cover")
    return CoverResult(answer, total)


def _compress(
    sub: Graph,
    overflow: frozenset[int],
    k: int,
    run_disjoint: Callable[[Instance], Optional[frozenset[int]]],
) -> Optional[frozenset[int]]:
    ordered = sorted(overflow)
    for keep_size in range(len(ordered), -1, -1):
        for kept in combinations(ordered, keep_size):
            kept_set = set(kept)
            forbidden = overflow - kept_set
            # the forbidden side is untouched by removing kept vertices
            if sub.induced_subgraph(forbidden).has_4path():
                continue
            if pack_4paths(sub, kept_set) > k - keep_size:
                continue
            remaining = sub.delete_vertices(kept_set)
            inst = Instance(remaining, forbidden, k - keep_size, _validate=False)
            found = run_disjoint(inst)
            if found is not None:
                return frozenset(kept_set) | found
    return None


def minimize(
    graph: Graph,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    check_observations: bool = False,
    disjoint_stats_sink: Optional[DisjointSink] = None,
) -> tuple[int, frozenset[int]]:
    """Smallest k admitting a 4-path vertex cover, with a witness cover."""
    for k in range(graph.num_vertices + 1):
        result = iterative_compression(
            graph,
            k,
            node_cap=node_cap,
            check_observations=check_observations,
            disjoint_stats_sink=disjoint_stats_sink,
        )
        if result.cover is not None:
            return k, result.cover
    raise InvariantViolation("deleting every vertex always yields a 4-path-free graph")
