"""Reproducible generators: random graphs, valid disjoint instances, and
fixtures that make the rule engine fire a chosen rule.

Everything is driven by ``random.Random(seed)`` (Mersenne Twister), so a
(model, parameters, seed) triple pins the output exactly. Rule-trigger
fixtures are validated at generation time: the engine must select exactly
the requested rule on the produced instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from .errors import GenerationError
from .graph import Graph
from .instance import Instance
from .rules import select_rule

RNG_ALGORITHM = "mersenne-twister"

MODELS = ("gnp", "path", "cycle", "star", "caterpillar", "cycle_of_stars", "rule_trigger")


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: Optional[int] = None
    p: Optional[float] = None
    s: Optional[int] = None
    seed: int = 0
    rule_id: Optional[int] = None


def generate(spec: GenSpec) -> Union[Graph, Instance]:
    if spec.model == "gnp":
        _need(spec, "n", "p")
        return gnp(spec.n, spec.p, spec.seed)
    if spec.model == "path":
        _need(spec, "n")
        return path_graph(spec.n)
    if spec.model == "cycle":
        _need(spec, "n")
        return cycle_graph(spec.n)
    if spec.model == "star":
        _need(spec, "n")
        return star_graph(spec.n)
    if spec.model == "caterpillar":
        _need(spec, "n")
        return caterpillar(spec.n, spec.seed)
    if spec.model == "cycle_of_stars":
        _need(spec, "s")
        return cycle_of_stars(spec.s, spec.seed)
    if spec.model == "rule_trigger":
        if spec.rule_id is None:
            raise GenerationError("rule_trigger requires rule_id")
        return rule_trigger(spec.rule_id, spec.seed)
    raise GenerationError(f"unknown model {spec.model!r}; expected one of {MODELS}")


def _need(spec: GenSpec, *fields: str) -> None:
    for f in fields:
        if getattr(spec, f) is None:
            raise GenerationError(f"model {spec.model!r} requires parameter {f!r}")


# -- plain graph models ---------------------------------------------------------


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); edge decisions drawn in ascending pair order."""
    rng = random.Random(seed)
    g = Graph(vertices=range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def path_graph(n: int) -> Graph:
    return Graph(vertices=range(n), edges=[(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GenerationError(f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(vertices=range(n), edges=edges)


def star_graph(n: int) -> Graph:
    """Star K1,(n-1): vertex 0 is the hub."""
    return Graph(vertices=range(n), edges=[(0, i) for i in range(1, n)])


def caterpillar(n: int, seed: int) -> Graph:
    """Spine path plus legs on random spine vertices, n vertices total."""
    rng = random.Random(seed)
    spine = max(2, n // 2)
    g = path_graph(spine)
    for v in range(spine, n):
        g.add_vertex(v)
        g.add_edge(v, rng.randrange(spine))
    return g


# -- disjoint instances -----------------------------------------------------------


def make_disjoint_instance(graph: Graph, seed: int) -> Instance:
    """Greedy forbidden-side construction: repeatedly pick one vertex of a
    remaining 4-path (seeded choice among those keeping the forbidden side
    4-path-free) and delete it.

    The resulting instance satisfies the construction contract; budget
    defaults to |V2|. Raises GenerationError when every vertex of some
    4-path would close a 4-path inside the forbidden side (dense graphs can
    admit no valid split at all).
    """
    rng = random.Random(seed)
    work = graph.copy()
    v1: set[int] = set()
    while True:
        path = work.find_4path()
        if path is None:
            break
        valid = [
            v for v in sorted(set(path))
            if not graph.induced_subgraph(v1 | {v}).has_4path()
        ]
        if not valid:
            raise GenerationError(
                "greedy cover construction got stuck; graph is too dense for a "
                "4-path-free forbidden side"
            )
        pick = rng.choice(valid)
        v1.add(pick)
        work = work.delete_vertices({pick})
    return Instance(graph, v1, graph.num_vertices - len(v1))


def cycle_of_stars(s: int, seed: int, extra_leaves: int = 0) -> Instance:
    """The terminal component shape: s size-3 stars linked in a cycle by
    degree-2 forbidden vertices, optionally with forbidden leaves hanging
    off the non-center star vertices. Minimum disjoint cover size is s.
    """
    if s < 2:
        raise GenerationError(f"cycle_of_stars needs s >= 2, got {s}")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    v1: list[int] = []
    # star i: u=3i, v=3i+1 (center), w=3i+2; connection i links w_i to u_{i+1}
    for i in range(s):
        u, v, w = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(v, u), (v, w)]
    for i in range(s):
        x = 3 * s + i
        v1.append(x)
        edges += [(x, 3 * i + 2), (x, 3 * ((i + 1) % s))]
    nxt = 4 * s
    attach_points = [3 * i for i in range(s)] + [3 * i + 2 for i in range(s)]
    for _ in range(extra_leaves):
        leaf = nxt
        nxt += 1
        v1.append(leaf)
        edges.append((leaf, rng.choice(attach_points)))
    edges, v1 = _relabel(edges, v1, rng)
    g = Graph(vertices=range(nxt), edges=edges)
    return Instance(g, v1, g.num_vertices - len(v1))


# -- rule triggers ------------------------------------------------------------------


def rule_trigger(rule_id: int, seed: int) -> Instance:
    """An instance on which the engine selects exactly ``rule_id``."""
    try:
        builder = _TRIGGERS[rule_id]
    except KeyError:
        raise GenerationError(f"no trigger family for rule {rule_id}") from None
    rng = random.Random((rule_id << 32) ^ seed)
    inst = builder(rng)
    match, _ = select_rule(inst)
    if match.rule_id != rule_id:
        raise GenerationError(
            f"trigger for rule {rule_id} selected rule {match.rule_id} instead"
        )
    return inst


def _relabel(edges, v1, rng) -> tuple[list[tuple[int, int]], list[int]]:
    n = 1 + max(max(u, v) for u, v in edges)
    perm = list(range(n))
    rng.shuffle(perm)
    return [(perm[u], perm[v]) for u, v in edges], [perm[x] for x in v1]


def _instance(edges, v1, rng, k: Optional[int] = None) -> Instance:
    edges, v1 = _relabel(edges, v1, rng)
    n = 1 + max(max(u, v) for u, v in edges)
    g = Graph(vertices=range(n), edges=edges)
    if k is None:
        k = g.num_vertices - len(v1)
    return Instance(g, v1, k)


def _trigger_01(rng):
    # budget exhausted while a 4-path remains: b-c edge flanked by forbidden ends
    edges = [(2, 0), (0, 1), (1, 3)]
    return _instance(edges, [2, 3], rng, k=0 if rng.random() < 0.5 else -1)


def _trigger_02(rng):
    # a star has no 4-path at all
    hub_leaves = rng.randint(2, 5)
    edges = [(0, i) for i in range(1, hub_leaves + 1)]
    return _instance(edges, [], rng)


def _trigger_03(rng):
    # one 4-path-free component next to a covered path component
    shape = rng.choice(("triangle", "star", "edge", "p3"))
    if shape == "triangle":
        edges = [(0, 1), (1, 2), (0, 2)]
        nxt = 3
    elif shape == "star":
        leaves = rng.randint(2, 4)
        edges = [(0, i) for i in range(1, leaves + 1)]
        nxt = leaves + 1
    elif shape == "edge":
        edges = [(0, 1)]
        nxt = 2
    else:
        edges = [(0, 1), (1, 2)]
        nxt = 3
    a, b, c, d = nxt, nxt + 1, nxt + 2, nxt + 3
    edges += [(a, b), (b, c), (c, d)]
    return _instance(edges, [b], rng)


def _trigger_04(rng):
    shape = rng.choice(("two_mid", "one_mid", "star_tail"))
    if shape == "two_mid":
        # b-c inner edge, forbidden endpoints
        edges = [(2, 0), (0, 1), (1, 3)]
        v1 = [2, 3]
    elif shape == "one_mid":
        # single free vertex on a mostly-forbidden path
        edges = [(1, 0), (0, 2), (2, 3)]
        v1 = [1, 2, 3]
    else:
        # free star with a forbidden 2-chain off the hub
        edges = [(0, 1), (0, 2), (0, 3), (3, 4)]
        v1 = [3, 4]
    return _instance(edges, v1, rng)


def _trigger_05(rng):
    if rng.random() < 0.5:
        # free star; x holds two of its leaves, the rest are movable
        leaves = rng.randint(3, 5)
        edges = [(0, i) for i in range(1, leaves + 1)]
        x = leaves + 1
        edges += [(x, 1), (x, 2)]
        return _instance(edges, [x], rng)
    # free triangle with an untouched corner
    extras = rng.randint(1, 2)
    edges = [(0, 1), (1, 2), (0, 2)]
    x = 3 + extras
    edges += [(x, 0), (x, 1)]
    edges += [(x, 3 + i) for i in range(extras)]
    return _instance(edges, [x], rng)


def _trigger_06(rng):
    # v sits inside a forbidden chain x1-v-x2-x3; pendants pad the component
    pendants = rng.randint(3, 5)
    v = 0
    pend = list(range(1, pendants + 1))
    x1, x2, x3 = pendants + 1, pendants + 2, pendants + 3
    edges = [(x1, v), (v, x2), (x2, x3)]
    edges += [(x1, w) for w in pend]
    return _instance(edges, [x1, x2, x3], rng)


def _trigger_07(rng):
    # x1-v-x3 with enough free neighbors outside the path
    extras = rng.randint(3, 5)
    v = 0
    outs = list(range(1, extras + 1))
    x1, x3 = extras + 1, extras + 2
    edges = [(x1, v), (x3, v)]
    for i, w in enumerate(outs):
        edges.append((x1 if i % 2 == 0 else x3, w))
    return _instance(edges, [x1, x3], rng)


def _trigger_08(rng):
    # forbidden edge x-y reached through v, whose only free neighbor is u
    v, u, w1, w2 = 0, 1, 2, 3
    x, y, z = 4, 5, 6
    edges = [(x, y), (x, v), (v, u), (u, w1), (u, w2), (z, w1), (z, w2)]
    return _instance(edges, [x, y, z], rng)


def _trigger_09(rng):
    # v and u are both pinched between the twin connection vertices x1, x2
    v, u, w, t, s = 0, 1, 2, 3, 4
    x1, x2, z = 5, 6, 7
    edges = [(x1, v), (x1, u), (x2, v), (x2, u), (u, w), (w, t), (z, t), (z, s)]
    return _instance(edges, [x1, x2, z], rng)


def _trigger_10(rng):
    # x grabs a star hub whose petals mostly lie outside N(x)
    petals = rng.randint(2, 4)
    u = 0
    pet = list(range(1, petals + 1))
    d = petals + 1
    edges = [(u, p) for p in pet]
    x = petals + 2
    edges += [(x, u), (x, d)]
    v1 = [x]
    nxt = petals + 3
    for p in pet:
        guard = nxt
        spare = nxt + 1
        nxt += 2
        edges += [(guard, p), (guard, spare)]
        v1.append(guard)
    return _instance(edges, v1, rng)


def _trigger_11(rng):
    triangle = rng.random() < 0.5
    spares = rng.randint(2, 3)
    if triangle:
        core = [0, 1, 2]
        edges = [(0, 1), (1, 2), (0, 2)]
    else:
        leaves = rng.randint(2, 3)
        core = list(range(leaves + 1))
        edges = [(0, i) for i in range(1, leaves + 1)]
    base = len(core)
    x = base + spares
    edges += [(x, c) for c in core]
    edges += [(x, base + i) for i in range(spares)]
    return _instance(edges, [x], rng)


def _trigger_12(rng):
    # split triangle; its far corner wears a forbidden leaf
    extras = rng.randint(1, 2)
    a, b, c = 0, 1, 2
    x = 3 + extras
    z = x + 1
    edges = [(a, b), (b, c), (a, c), (x, a), (x, b), (z, c)]
    edges += [(x, 3 + i) for i in range(extras)]
    return _instance(edges, [x, z], rng)


def _trigger_13(rng):
    v, u, w, u2, f = 0, 1, 2, 3, 4
    x, y, yw = 5, 6, 7
    edges = [(v, u), (v, w), (x, u), (x, u2), (y, u2), (yw, w), (yw, f)]
    return _instance(edges, [x, y, yw], rng)


def _trigger_14(rng):
    # x holds the star center and one petal; boundary petal has its own guard
    u, l1, v, m, g = 0, 1, 2, 3, 4
    x, xv = 5, 6
    edges = [(u, l1), (u, v), (x, u), (x, l1), (x, m), (xv, v), (xv, g)]
    return _instance(edges, [x, xv], rng)


def _trigger_15(rng):
    p, q, u1, c1, l, f = 0, 1, 2, 3, 4, 5
    x, xl = 6, 7
    edges = [(p, q), (c1, u1), (c1, l), (x, p), (x, q), (x, u1), (xl, l), (xl, f)]
    return _instance(edges, [x, xl], rng)


def _trigger_16(rng):
    # contained singleton plus one narrow and one wide split
    d, u1, c1, l1, f1, a, b, c2, l2, f2 = range(10)
    x, x1, x2 = 10, 11, 12
    edges = [
        (x, d), (x, u1), (x, a), (x, b),
        (c1, u1), (c1, l1),
        (c2, a), (c2, b), (c2, l2),
        (x1, l1), (x1, f1),
        (x2, l2), (x2, f2),
    ]
    return _instance(edges, [x, x1, x2], rng)


def _trigger_17(rng):
    # x sees only one split star; the rest of the component hangs off its
    # spare petal through a chain of guarded components
    c, a, b, l, m, m2, l2, c2, a2, b2 = range(10)
    x, xl, xm, x2 = 10, 11, 12, 13
    edges = [
        (c, a), (c, b), (c, l),
        (x, a), (x, b),
        (xl, l), (xl, m), (m, m2),
        (xm, m2), (xm, l2),
        (c2, a2), (c2, b2), (c2, l2),
        (x2, a2), (x2, b2),
    ]
    return _instance(edges, [x, xl, xm, x2], rng)


def _trigger_18(rng):
    v, u, w, u2, t = 0, 1, 2, 3, 4
    x, xw, yv, z = 5, 6, 7, 8
    edges = [
        (v, u), (v, w), (u2, t),
        (x, u), (x, u2), (xw, w), (xw, t),
        (yv, v), (z, u2),
    ]
    return _instance(edges, [x, xw, yv, z], rng)


def _trigger_19(rng):
    v, u, w, u2, t = 0, 1, 2, 3, 4
    x, xw, yv = 5, 6, 7
    edges = [
        (v, u), (v, w), (u2, t),
        (x, u), (x, u2), (xw, w), (xw, t),
        (yv, v),
    ]
    return _instance(edges, [x, xw, yv], rng)


def _trigger_20(rng):
    c, p, q, r, c2, u2, s = range(7)
    x, x2 = 7, 8
    edges = [
        (c, p), (c, q), (c, r),
        (c2, u2), (c2, s),
        (x, p), (x, q), (x, u2),
        (x2, r), (x2, s),
    ]
    return _instance(edges, [x, x2], rng)


def _trigger_21(rng):
    if rng.random() < 0.5:
        # three splits, one star of size 4 to even out the guard pairing
        c1, u1, w1, w1b, c2, u2, w2, c3, u3, w3 = range(10)
        x, xa, xb = 10, 11, 12
        edges = [
            (c1, u1), (c1, w1), (c1, w1b),
            (c2, u2), (c2, w2),
            (c3, u3), (c3, w3),
            (x, u1), (x, u2), (x, u3),
            (xa, w1), (xa, w2),
            (xb, w1b), (xb, w3),
        ]
        return _instance(edges, [x, xa, xb], rng)
    # four splits, guards paired up
    edges = []
    us = []
    ws = []
    for i in range(4):
        c, u, w = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(c, u), (c, w)]
        us.append(u)
        ws.append(w)
    x, xa, xb = 12, 13, 14
    edges += [(x, u) for u in us]
    edges += [(xa, ws[0]), (xa, ws[1]), (xb, ws[2]), (xb, ws[3])]
    return _instance(edges, [x, xa, xb], rng)


def _trigger_22(rng):
    if rng.random() < 0.5:
        # two size-4 stars, cross-guarded
        c, u, w, w2, c2, u2, wp, zp = range(8)
        x, x1, x2 = 8, 9, 10
        edges = [
            (c, u), (c, w), (c, w2),
            (c2, u2), (c2, wp), (c2, zp),
            (x, u), (x, u2),
            (x1, w), (x1, wp),
            (x2, w2), (x2, zp),
        ]
        return _instance(edges, [x, x1, x2], rng)
    # sizes (3, 4) next to a spare size-4 star absorbing the odd guard slot
    c, u, w = 0, 1, 2
    c2, u2, wp, zp = 3, 4, 5, 6
    c3, t1, t2, t3 = 7, 8, 9, 10
    x, x1, x2, x3 = 11, 12, 13, 14
    edges = [
        (c, u), (c, w),
        (c2, u2), (c2, wp), (c2, zp),
        (c3, t1), (c3, t2), (c3, t3),
        (x, u), (x, u2),
        (x1, w), (x1, t1),
        (x2, wp), (x2, t2),
        (x3, zp), (x3, t3),
    ]
    return _instance(edges, [x, x1, x2, x3], rng)


def _trigger_23(rng):
    # two mirrored size-4 stars whose petals pair up through connection
    # vertices; leaves on one side rule out the three-way branch split
    c = 0
    vs = [1, 2, 3]
    c2 = 4
    vs2 = [5, 6, 7]
    xs = [8, 9, 10]
    zs = [11, 12, 13]
    edges = [(c, v) for v in vs] + [(c2, v) for v in vs2]
    for x, v, v2, z in zip(xs, vs, vs2, zs):
        edges += [(x, v), (x, v2), (z, v)]
    return _instance(edges, xs + zs, rng)


def _trigger_24(rng):
    s = rng.randint(2, 4)
    leaves = rng.randint(0, 3)
    return cycle_of_stars(s, rng.randrange(2**30), extra_leaves=leaves)


_TRIGGERS = {
    1: _trigger_01,
    2: _trigger_02,
    3: _trigger_03,
    4: _trigger_04,
    5: _trigger_05,
    6: _trigger_06,
    7: _trigger_07,
    8: _trigger_08,
    9: _trigger_09,
    10: _trigger_10,
    11: _trigger_11,
    12: _trigger_12,
    13: _trigger_13,
    14: _trigger_14,
    15: _trigger_15,
    16: _trigger_16,
    17: _trigger_17,
    18: _trigger_18,
    19: _trigger_19,
    20: _trigger_20,
    21: _trigger_21,
    22: _trigger_22,
    23: _trigger_23,
    24: _trigger_24,
}
