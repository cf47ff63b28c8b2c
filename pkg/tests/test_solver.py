import math

import pytest

from pvc4 import (
    Graph,
    Instance,
    NodeBudgetExceeded,
    brute_min_disjoint,
    brute_min_pvc4,
    iterative_compression,
    minimize,
    solve_disjoint,
    verify_cover,
)
from pvc4.generators import cycle_graph, gnp, make_disjoint_instance, path_graph, star_graph
from pvc4.errors import GenerationError

from conftest import complete_graph, random_graph


def test_disjoint_path_basics():
    g = path_graph(4)
    inst = Instance(g, [0, 3], 1)
    res = solve_disjoint(inst)
    assert res.cover == {1}
    assert solve_disjoint(inst.with_budget(0)).cover is None


def test_disjoint_matches_oracle_on_random_instances():
    made = 0
    seed = 0
    while made < 60:
        seed += 1
        g = gnp(6 + seed % 8, 0.15 + (seed % 6) / 15, seed)
        try:
            inst = make_disjoint_instance(g, seed)
        except GenerationError:
            continue
        made += 1
        want = brute_min_disjoint(inst).min_size
        for k in range(len(inst.v2) + 1):
            res = solve_disjoint(inst.with_budget(k))
            assert (res.cover is not None) == (k >= want)
            if res.cover is not None:
                assert len(res.cover) <= k
                assert not (res.cover & inst.v1)
                assert verify_cover(g, res.cover)


def test_compression_p4():
    assert iterative_compression(path_graph(4), 1).cover is not None
    assert iterative_compression(path_graph(4), 0).cover is None


def test_compression_k5():
    k5 = complete_graph(5)
    assert iterative_compression(k5, 1).cover is None
    res = iterative_compression(k5, 2)
    assert res.cover is not None and len(res.cover) == 2


def test_compression_rejects_negative_budget():
    with pytest.raises(ValueError):
        iterative_compression(path_graph(4), -1)


def test_minimize_examples():
    assert minimize(star_graph(6))[0] == 0
    assert minimize(path_graph(7))[0] == 1
    assert minimize(cycle_graph(8))[0] == 2


def test_minimize_returns_verified_cover():
    for seed in range(25):
        g = random_graph(8, 0.35, seed)
        size, cover = minimize(g)
        assert len(cover) == size == brute_min_pvc4(g).min_size
        assert verify_cover(g, cover)


def test_monotone_in_budget():
    for seed in range(10):
        g = random_graph(8, 0.4, seed)
        feasible = [iterative_compression(g, k).cover is not None for k in range(6)]
        assert feasible == sorted(feasible)  # once yes, always yes


def test_verify_cover(p4):
    assert verify_cover(p4, {1})
    assert not verify_cover(p4, set())
    with pytest.raises(ValueError):
        verify_cover(p4, {9})


def test_verify_cover_matches_brute_force():
    from conftest import brute_force_has_4path

    for seed in range(25):
        g = random_graph(7, 0.35, seed)
        s = {v for v in g.vertices() if (v + seed) % 3 == 0}
        assert verify_cover(g, s) == (not brute_force_has_4path(g.delete_vertices(s)))


def test_node_cap():
    g = gnp(20, 0.2, seed=1)
    with pytest.raises(NodeBudgetExceeded):
        iterative_compression(g, 6, node_cap=3)


def test_solve_is_deterministic():
    made = 0
    seed = 0
    while made < 10:
        seed += 1
        g = gnp(10, 0.25, seed)
        try:
            inst = make_disjoint_instance(g, seed)
        except GenerationError:
            continue
        made += 1
        a = solve_disjoint(inst.with_budget(2))
        b = solve_disjoint(inst.with_budget(2))
        assert a.cover == b.cover
        assert a.stats.nodes == b.stats.nodes
        assert a.stats.leaves == b.stats.leaves
        assert a.stats.rule_fires == b.stats.rule_fires


def test_stats_shape():
    inst = Instance(path_graph(4), [0, 3], 1)
    res = solve_disjoint(inst)
    assert res.stats.leaves <= res.stats.nodes
    assert sum(res.stats.rule_fires.values()) == res.stats.nodes
    assert res.stats.elapsed >= 0.0


def test_leaf_bound_smoke():
    made = 0
    seed = 0
    while made < 40:
        seed += 1
        g = gnp(8 + seed % 6, 0.2 + (seed % 5) / 15, seed)
        try:
            inst = make_disjoint_instance(g, seed)
        except GenerationError:
            continue
        made += 1
        for k in range(len(inst.v2) + 1):
            res = solve_disjoint(inst.with_budget(k))
            assert res.stats.leaves <= math.ceil(1.62**k)


def test_compression_stats_sink_reports_each_call():
    calls = []
    g = gnp(12, 0.3, seed=5)
    iterative_compression(g, 3, disjoint_stats_sink=lambda k0, s: calls.append((k0, s.nodes)))
    assert all(nodes >= 1 for _, nodes in calls)


def test_trace_hook_sees_every_node():
    inst = Instance(path_graph(4), [0, 3], 1)
    seen = []
    res = solve_disjoint(inst, on_node=lambda d, m, o: seen.append((d, m.rule_id)))
    assert len(seen) == res.stats.nodes
    assert seen[0][0] == 0
