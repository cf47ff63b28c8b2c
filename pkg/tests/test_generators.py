import pytest

from pvc4 import Graph, Instance, select_rule
from pvc4.errors import GenerationError
from pvc4.generators import (
    GenSpec,
    caterpillar,
    cycle_graph,
    cycle_of_stars,
    generate,
    gnp,
    make_disjoint_instance,
    path_graph,
    rule_trigger,
    star_graph,
)
from pvc4.oracle import brute_min_disjoint


def test_gnp_deterministic():
    a = gnp(12, 0.2, seed=7)
    b = gnp(12, 0.2, seed=7)
    assert a.edges() == b.edges()
    c = gnp(12, 0.2, seed=8)
    assert a.edges() != c.edges()


def test_fixed_shapes():
    assert path_graph(7).edges() == [(i, i + 1) for i in range(6)]
    assert cycle_graph(5).num_edges == 5
    assert star_graph(6).is_star() == 0
    cat = caterpillar(10, seed=2)
    assert cat.num_vertices == 10
    assert cat.num_edges == 9  # tree


def test_generate_dispatch_and_validation():
    g = generate(GenSpec(model="gnp", n=8, p=0.3, seed=1))
    assert isinstance(g, Graph)
    inst = generate(GenSpec(model="cycle_of_stars", s=2, seed=0))
    assert isinstance(inst, Instance)
    with pytest.raises(GenerationError):
        generate(GenSpec(model="gnp", n=8, seed=1))  # missing p
    with pytest.raises(GenerationError):
        generate(GenSpec(model="nope"))
    with pytest.raises(GenerationError):
        generate(GenSpec(model="rule_trigger", seed=1))  # missing rule_id


def test_cycle_of_stars_minimum_is_s():
    for s in (2, 3):
        inst = cycle_of_stars(s, seed=4)
        assert brute_min_disjoint(inst).min_size == s


def test_cycle_of_stars_triggers_final_rule():
    inst = cycle_of_stars(2, seed=9, extra_leaves=2)
    assert select_rule(inst)[0].rule_id == 24


def test_rule_triggers_fire_requested_rule():
    for r in range(1, 25):
        for seed in range(8):
            inst = rule_trigger(r, seed)
            assert select_rule(inst)[0].rule_id == r


def test_rule_trigger_deterministic():
    a = rule_trigger(16, 3)
    b = rule_trigger(16, 3)
    assert a.graph.edges() == b.graph.edges()
    assert a.v1 == b.v1


def test_rule_trigger_unknown_rule():
    with pytest.raises(GenerationError):
        rule_trigger(25, 0)


def test_make_disjoint_instance_path():
    inst = make_disjoint_instance(path_graph(4), seed=0)
    assert len(inst.v1) == 1
    assert inst.v1 <= {0, 1, 2, 3}


def test_make_disjoint_instance_star():
    inst = make_disjoint_instance(star_graph(7), seed=0)
    assert inst.v1 == frozenset()


def test_make_disjoint_instance_valid():
    made = 0
    seed = 0
    while made < 30:
        seed += 1
        g = gnp(6 + seed % 8, 0.15 + (seed % 7) / 20, seed)
        try:
            inst = make_disjoint_instance(g, seed)
        except GenerationError:
            continue
        made += 1
        inst.check_invariants()
        assert inst.k == len(inst.v2)


def test_make_disjoint_instance_dense_raises():
    from conftest import complete_graph

    with pytest.raises(GenerationError):
        make_disjoint_instance(complete_graph(8), seed=0)
