"""The 24 prioritized reduction and branching rules of the disjoint solver.

Each rule is a matcher over an :class:`~pvc4.instance.Instance` that either
declines (returns None) or produces a witness plus an outcome. The engine
(:func:`select_rule`) tries the rules in order and returns the first hit;
rule 24 is a structured fallback that validates the only component shape
that can survive rules 1-23, so selection is total on valid instances.

Outcomes:

* ``Terminal(answer)`` decides the instance.
* ``Reduce(next, note)`` rewrites the instance without consuming budget and
  strictly shrinks ``(|V2|, |E|, |V|)`` lexicographically.
* ``Branch(branches)`` lists nonempty vertex sets; the solver recurses on
  each, committing the set to the cover and decreasing the budget by its
  size.

All pattern searches scan vertices and components in ascending (minimum) id
order, so the chosen witness is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Union

from .errors import InvariantViolation
from .graph import has_4path_avoiding
from .instance import Instance


@dataclass(frozen=True)
class Terminal:
    answer: bool


@dataclass(frozen=True)
class Reduce:
    next: Instance
    note: str  # drop_component | move_to_v1 | delete_edge


@dataclass(frozen=True)
class Branch:
    branches: tuple[frozenset[int], ...]


RuleOutcome = Union[Terminal, Reduce, Branch]


@dataclass(frozen=True)
class RuleMatch:
    rule_id: int
    witness: tuple


def _branch(inst: Instance, *sets) -> Branch:
    out = []
    for s in sets:
        s = frozenset(s)
        if not s:
            raise InvariantViolation("empty branch set")
        if s & inst.v1:
            raise InvariantViolation(f"branch set {sorted(s)} meets the forbidden set")
        out.append(s)
    return Branch(tuple(out))


# -- rules 1-2: terminal checks --------------------------------------------------


def rule01_budget(inst: Instance):
    if inst.k < 0 or (inst.k == 0 and inst.has_4path()):
        return (inst.k,), Terminal(False)
    return None


def rule02_solved(inst: Instance):
    if not inst.has_4path():
        return (), Terminal(True)
    return None


# -- rules 3-5: reductions --------------------------------------------------------


def rule03_drop_component(inst: Instance):
    comps, flags = inst.graph_component_4path_flags()
    for comp, has4p in zip(comps, flags):
        if not has4p:
            comp_set = set(comp)
            nxt = Instance(
                inst.graph.delete_vertices(comp_set),
                inst.v1 - comp_set,
                inst.k,
                _validate=False,
            )
            return (comp,), Reduce(nxt, "drop_component")
    return None


def rule04_small_component(inst: Instance):
    for comp in inst.graph_components():
        inside_v2 = [v for v in comp if v not in inst.v1]
        if len(inside_v2) > 3:
            continue
        sub = inst.graph.induced_subgraph(comp)
        cover = None
        for size in range(len(inside_v2) + 1):
            for cand in combinations(inside_v2, size):
                if not has_4path_avoiding(sub, set(cand)):
                    cover = cand
                    break
            if cover is not None:
                break
        if not cover:
            # rule 3 declined, so the component has a 4-path and any cover
            # of it must take at least one of its v2 vertices
            raise InvariantViolation(f"component {comp} has no nonempty minimum cover")
        return (comp, cover), _branch(inst, cover)
    return None


def rule05_move_to_v1(inst: Instance):
    adj = inst.graph._adj
    deg1 = inst._deg1_map()
    for v in inst.v2_sorted():
        d1 = deg1[v]
        d2 = len(adj[v]) - d1
        if d2 == 1:
            if d1 == 0 or all(inst.is_leaf(y) for y in inst.n1(v)):
                return (v,), Reduce(inst.move_to_v1(v), "move_to_v1")
        elif d2 == 2 and d1 == 0:
            if inst.v2_component_is_triangle(inst.v2_component_of(v)):
                return (v,), Reduce(inst.move_to_v1(v), "move_to_v1")
    return None


# -- rules 6-7: forced vertices around mostly-forbidden paths ----------------------


def rule06_forced_vertex(inst: Instance):
    # 4-path with exactly one v2 vertex; scan middle edges in canonical order
    adj = inst.graph._adj
    v1 = inst.v1
    deg1 = inst._deg1_map()
    # three of the four path vertices are forbidden, so two of them are
    # adjacent; without a forbidden-forbidden edge the rule cannot fire
    if all(deg1[x] == 0 for x in v1):
        return None
    for p, q in inst.graph.edges():
        for u, v in ((p, q), (q, p)):
            mid_v2 = (u not in v1) + (v not in v1)
            if mid_v2 > 1:
                continue
            a_all = adj[u] - {v}
            b_all = adj[v] - {u}
            if mid_v2 == 1:
                a_pool = sorted(a_all & v1)
                b_pool = sorted(b_all & v1)
                for a in a_pool:
                    for b in b_pool:
                        if b != a:
                            path = (a, u, v, b)
                            forced = u if u not in v1 else v
                            return (path,), _branch(inst, {forced})
            else:
                for a in sorted(a_all):
                    pool = b_all & v1 if a not in v1 else b_all - v1
                    for b in sorted(pool):
                        if b != a:
                            path = (a, u, v, b)
                            forced = a if a not in v1 else b
                            return (path,), _branch(inst, {forced})
    return None


def rule07_p3_branch(inst: Instance):
    # path x1,x2,x3 with one v2 vertex and >=2 outside v2 neighbors of the ends
    v1 = inst.v1
    adj = inst.graph._adj
    deg1 = inst._deg1_map()
    for x2 in inst.graph.vertices():
        nbrs = adj[x2]
        if len(nbrs) < 2:
            continue
        mid_forbidden = x2 in v1
        if mid_forbidden:
            # need one free end and one forbidden end
            if deg1[x2] == 0 or deg1[x2] == len(nbrs):
                continue
        elif deg1[x2] < 2:
            # both ends must be forbidden
            continue
        for x1, x3 in combinations(sorted(nbrs), 2):
            free = (x1 not in v1) + (not mid_forbidden) + (x3 not in v1)
            if free != 1:
                continue
            path = {x1, x2, x3}
            outside = (inst.n2(x1) | inst.n2(x3)) - path
            if len(outside) >= 2:
                v = next(w for w in path if w not in v1)
                return ((x1, x2, x3),), _branch(inst, {v}, outside)
    return None


# -- rules 8-9: cleaning up the forbidden side --------------------------------------


def rule08_v1_edge(inst: Instance):
    for comp in inst.components_i(1):
        if len(comp) < 2:
            continue
        # N(comp) is all v2: a forbidden vertex adjacent to the component
        # would belong to it
        candidates = sorted(inst.graph.neighborhood_of_set(comp))
        for v in candidates:
            if inst.deg2(v) == 1:
                (u,) = inst.n2(v)
                return (comp, v, u), _branch(inst, {u})
        raise InvariantViolation(
            f"no degree-1 attachment next to forbidden component {comp}"
        )
    return None


def rule09_delete_edge(inst: Instance):
    for v in inst.v2_sorted():
        conns = inst.adjacent_connections(v)
        if len(conns) >= 2:
            x1, x2 = conns[0], conns[1]
            return (v, x1, x2), Reduce(inst.delete_edge(v, x2), "delete_edge")
    return None


# -- rules 10-23: connection-vertex branching ----------------------------------------


def rule10_boundary_branch(inst: Instance):
    for x in inst.connection_vertices():
        nbrs = inst.graph.adj(x)
        for comp in inst.split_components(x):
            for u in comp:
                if u not in nbrs:
                    continue
                outside = inst.n2(u) - nbrs
                if len(outside) >= 2:
                    return (x, comp, u), _branch(inst, {u}, outside)
    return None


def rule11_contained_big(inst: Instance):
    for comp in inst.components_i(2):
        if len(comp) < 3:
            continue
        for x in inst.connection_vertices():
            if inst.contains(x, comp):
                center = inst.v2_component_center(comp)
                mid = comp[0] if center is None else center
                return (comp, x, mid), _branch(inst, {mid})
    return None


def rule12_triangle(inst: Instance):
    for comp in inst.components_i(2):
        if not inst.v2_component_is_triangle(comp):
            continue
        for x in inst.connection_vertices():
            if inst.splits(x, comp):
                v = inst.boundary_vertex(x, comp)
                return (comp, x, v), _branch(inst, {v}, set(comp) - {v})
        raise InvariantViolation(f"triangle component {comp} is split by no connection vertex")
    return None


def rule13_split1_leaves(inst: Instance):
    for x in inst.connection_vertices():
        split = inst.split_components(x)
        if len(split) != 1:
            continue
        nbrs = sorted(inst.graph.adj(x))
        if not any(inst.adjacent_to_leaf(w) for w in nbrs):
            continue
        v = inst.boundary_vertex(x, split[0])
        u = next(w for w in nbrs if v in inst.graph.adj(w))
        return (x, split[0], u), _branch(inst, {u})
    return None


def rule14_not_independent(inst: Instance):
    for x in inst.connection_vertices():
        nbrs = inst.graph.adj(x)
        for comp in inst.split_components(x):
            if inst.graph.is_independent_set(set(comp) & nbrs):
                continue
            # triangles were consumed by rule 12, so comp is a star
            u = inst.v2_component_center(comp)
            if u is None:
                raise InvariantViolation(f"split component {comp} is neither star nor triangle")
            v = inst.boundary_vertex(x, comp)
            return (x, comp, u, v), _branch(inst, {u}, {v} | (nbrs - set(comp)))
    return None


def rule15_contains_special(inst: Instance):
    for x in inst.connection_vertices():
        contained = inst.contained_components(x)
        if len(contained) != 1 or len(contained[0]) != 2:
            continue
        nbrs = inst.graph.adj(x)
        split = inst.split_components(x)
        if any(len(set(c) & nbrs) != 1 for c in split):
            continue
        c_prime = contained[0]
        u = c_prime[0]
        first = nbrs - set(c_prime)
        if not first:
            raise InvariantViolation(f"connection vertex {x} splits nothing at rule 15")
        return (x, c_prime), _branch(inst, first, inst.sb(x) | {u})
    return None


def rule16_contains(inst: Instance):
    for x in inst.connection_vertices():
        if inst.contained_components(x):
            take = inst.sb(x) | inst.sc(x)
            # an empty set would mean the whole component is a star that
            # rule 3 should have dropped
            return (x,), _branch(inst, take)
    return None


def rule17_split_one(inst: Instance):
    for x in inst.connection_vertices():
        if len(inst.split_components(x)) == 1:
            return (x,), _branch(inst, inst.sb(x))
    return None


def rule18_degv_leaf(inst: Instance):
    for x in inst.connection_vertices():
        nbrs = sorted(inst.graph.adj(x))
        if not any(inst.adjacent_to_leaf(w) for w in nbrs):
            continue
        for comp in inst.split_components(x):
            v = inst.boundary_vertex(x, comp)
            if inst.deg1(v) < 1:
                continue
            inside = set(comp) & inst.graph.adj(x)
            if len(inside) != 1:
                raise InvariantViolation(
                    f"expected a single neighbor of {x} in {comp}, got {sorted(inside)}"
                )
            (u,) = inside
            return (x, comp, u, v), _branch(inst, {u}, {v} | (set(nbrs) - {u}))
    return None


def rule19_degv(inst: Instance):
    for x in inst.connection_vertices():
        for comp in inst.split_components(x):
            v = inst.boundary_vertex(x, comp)
            if inst.deg1(v) < 1:
                continue
            u = min(set(comp) & inst.graph.adj(x))
            return (x, comp, u, v), _branch(inst, {u}, inst.sb(x))
    return None


def rule20_large_intersection(inst: Instance):
    for x in inst.connection_vertices():
        nbrs = inst.graph.adj(x)
        for comp in inst.split_components(x):
            if len(set(comp) & nbrs) >= 2:
                take = inst.sb(x)
                if len(take) < 2:
                    raise InvariantViolation(
                        f"connection vertex {x} splits a single component at rule 20"
                    )
                return (x, comp), _branch(inst, take)
    return None


def rule21_split_three(inst: Instance):
    for x in inst.connection_vertices():
        split = inst.split_components(x)
        if len(split) < 3:
            continue
        nbrs = inst.graph.adj(x)
        sb = inst.sb(x)
        branches = [sb]
        for comp in split:
            branches.append((set(comp) - nbrs - sb) | (nbrs - set(comp)))
        return (x, tuple(split)), _branch(inst, *branches)
    return None


def rule22_large_far_component(inst: Instance):
    for x in inst.connection_vertices():
        split = inst.split_components(x)
        if len(split) != 2:
            continue
        nbrs = inst.graph.adj(x)
        if any(inst.adjacent_to_leaf(w) for w in nbrs):
            continue
        for comp, far in ((split[0], split[1]), (split[1], split[0])):
            if len(far) < 4:
                continue
            inter = set(comp) & nbrs
            inter_far = set(far) & nbrs
            if len(inter) != 1 or len(inter_far) != 1:
                raise InvariantViolation(
                    f"connection vertex {x} meets a split component in several "
                    f"vertices at rule 22"
                )
            (u,) = inter
            (u_far,) = inter_far
            v = inst.boundary_vertex(x, comp)
            v_far = inst.boundary_vertex(x, far)
            return (x, comp, far), _branch(
                inst,
                {v, v_far},
                (set(comp) - {u, v}) | {u_far},
                {u} | (set(far) - {u_far, v_far}),
            )
    return None


def rule23_large_star(inst: Instance):
    for comp in inst.components_i(2):
        if len(comp) < 4:
            continue
        center = inst.v2_component_center(comp)
        if center is None:
            raise InvariantViolation(f"large 2-component {comp} is not a star")
        petals = [v for v in comp if v != center]
        partners = []
        for v in petals:
            conns = inst.adjacent_connections(v)
            if len(conns) != 1:
                raise InvariantViolation(
                    f"star vertex {v} has {len(conns)} adjacent connection vertices"
                )
            others = inst.graph.adj(conns[0]) - {v}
            if len(others) != 1:
                raise InvariantViolation(
                    f"connection vertex {conns[0]} should have exactly one other neighbor"
                )
            partners.append((conns[0], next(iter(others))))
        if len({x for x, _ in partners}) != len(petals):
            raise InvariantViolation(f"connection vertices around {comp} are not distinct")
        branches = [
            {partners[i][1]} | (set(petals) - {v})
            for i, v in enumerate(petals)
        ]
        return (comp, center), _branch(inst, *branches)
    return None


def rule24_cycle_of_stars(inst: Instance):
    comp = inst.graph_components()[0]
    stars, details = _validate_cycle_of_stars(inst, comp)
    start = min(v for v in comp if v not in inst.v1)
    start_star = details["star_of"][start]
    u = min(details["noncenters"][start_star])
    take = []
    star = start_star
    while True:
        take.append(u)
        (w,) = details["noncenters"][star] - {u}
        x = details["connection_of"][w]
        (nxt,) = inst.graph.adj(x) - {w}
        star = details["star_of"][nxt]
        u = nxt
        if star == start_star:
            break
    if u != take[0] or len(take) != len(stars):
        raise InvariantViolation(f"star cycle traversal of {comp} did not close")
    return (comp, tuple(take)), _branch(inst, take)


def _validate_cycle_of_stars(inst: Instance, comp: tuple[int, ...]):
    """Check the rule-24 component shape; raise InvariantViolation on mismatch.

    Expected: size-3 star 2-components whose non-center vertices each attach
    to exactly one degree-2 connection vertex linking two different stars in
    a single cycle, plus optional forbidden leaves on non-center vertices.
    """
    comp_set = set(comp)
    stars = [c for c in inst.components_i(2) if c[0] in comp_set]
    star_of: dict[int, tuple[int, ...]] = {}
    noncenters: dict[tuple[int, ...], set[int]] = {}
    for star in stars:
        if len(star) != 3:
            raise InvariantViolation(f"2-component {star} is not of size 3")
        center = inst.v2_component_center(star)
        if center is None:
            raise InvariantViolation(f"2-component {star} is not a star")
        if inst.deg1(center) != 0:
            raise InvariantViolation(f"star center {center} has forbidden neighbors")
        noncenters[star] = set(star) - {center}
        for v in star:
            star_of[v] = star

    connection_of: dict[int, int] = {}
    connections = [x for x in comp if x in inst.v1 and inst.is_connection(x)]
    for x in connections:
        nbrs = inst.graph.adj(x)
        if len(nbrs) != 2:
            raise InvariantViolation(f"connection vertex {x} has degree {len(nbrs)}")
        a, b = sorted(nbrs)
        if star_of.get(a) is None or star_of.get(b) is None or star_of[a] == star_of[b]:
            raise InvariantViolation(f"connection vertex {x} does not link two stars")
        for v in (a, b):
            if v in star_of and v not in noncenters[star_of[v]]:
                raise InvariantViolation(f"connection vertex {x} attaches to a star center")
            if v in connection_of:
                raise InvariantViolation(f"vertex {v} attaches to two connection vertices")
            connection_of[v] = x

    for star in stars:
        for v in noncenters[star]:
            if v not in connection_of:
                raise InvariantViolation(f"star vertex {v} lacks a connection vertex")

    for y in comp:
        if y not in inst.v1:
            continue
        if y in connections:
            continue
        if not inst.is_leaf(y):
            raise InvariantViolation(f"forbidden vertex {y} is neither connection nor leaf")
        (nbr,) = inst.n2(y)
        if nbr not in connection_of:
            raise InvariantViolation(f"leaf {y} hangs off a non-attachment vertex")

    if len(connections) != len(stars):
        raise InvariantViolation(
            f"{len(connections)} connection vertices for {len(stars)} stars"
        )
    return stars, {
        "star_of": star_of,
        "noncenters": noncenters,
        "connection_of": connection_of,
    }


# -- engine ------------------------------------------------------------------------

_RULES: tuple[tuple[int, Callable[[Instance], Optional[tuple]]], ...] = (
    (1, rule01_budget),
    (2, rule02_solved),
    (3, rule03_drop_component),
    (4, rule04_small_component),
    (5, rule05_move_to_v1),
    (6, rule06_forced_vertex),
    (7, rule07_p3_branch),
    (8, rule08_v1_edge),
    (9, rule09_delete_edge),
    (10, rule10_boundary_branch),
    (11, rule11_contained_big),
    (12, rule12_triangle),
    (13, rule13_split1_leaves),
    (14, rule14_not_independent),
    (15, rule15_contains_special),
    (16, rule16_contains),
    (17, rule17_split_one),
    (18, rule18_degv_leaf),
    (19, rule19_degv),
    (20, rule20_large_intersection),
    (21, rule21_split_three),
    (22, rule22_large_far_component),
    (23, rule23_large_star),
    (24, rule24_cycle_of_stars),
)

RULE_IDS = tuple(rid for rid, _ in _RULES)


def select_rule(inst: Instance) -> tuple[RuleMatch, RuleOutcome]:
    """Apply the first applicable rule. Total on valid instances."""
    for rid, fn in _RULES:
        hit = fn(inst)
        if hit is not None:
            witness, outcome = hit
            return RuleMatch(rid, witness), outcome
    raise InvariantViolation("no rule applies; the case analysis should be exhaustive")


def applicable_rules(inst: Instance, upto: int = 24) -> list[int]:
    """Ids of all individually-matching rules (testing aid).

    Rule 24 is only probed when everything before it declined, mirroring its
    fallback role.
    """
    out = []
    for rid, fn in _RULES:
        if rid > upto:
            break
        if rid == 24:
            if out:
                break
            out.append(24 if fn(inst) is not None else None)
            break
        try:
            hit = fn(inst)
        except InvariantViolation:
            hit = None
        if hit is not None:
            out.append(rid)
    return [r for r in out if r is not None]
