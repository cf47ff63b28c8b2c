import pytest

from pvc4 import Graph, Instance, InvalidInstanceError
from pvc4.instance import CONNECTION, LEAF, OTHER

from conftest import random_graph


def make(edges, v1, k=5, n=None):
    n = n if n is not None else 1 + max(max(u, v) for u, v in edges)
    return Instance(Graph(vertices=range(n), edges=edges), v1, k)


def test_constructor_rejects_forbidden_4path():
    with pytest.raises(InvalidInstanceError):
        make([(0, 1), (1, 2), (2, 3)], v1=[0, 1, 2, 3])


def test_constructor_rejects_non_cover():
    with pytest.raises(InvalidInstanceError):
        make([(0, 1), (1, 2), (2, 3)], v1=[])


def test_constructor_rejects_unknown_vertex():
    with pytest.raises(InvalidInstanceError):
        make([(0, 1)], v1=[9])


def test_degree_filters():
    # x in v1 adjacent to two free vertices; y a forbidden pendant
    inst = make([(2, 0), (2, 1), (3, 0)], v1=[2, 3])
    assert inst.deg2(2) == 2 and inst.deg1(2) == 0
    assert inst.deg2(3) == 1 and inst.deg1(3) == 0
    assert inst.n2(2) == {0, 1}
    assert inst.n1(0) == {2, 3}
    assert inst.n_i(0, 1) == {2, 3}
    assert inst.deg_i(2, 2) == 2
    with pytest.raises(ValueError):
        inst.deg_i(0, 3)


def test_degree_filters_match_set_arithmetic():
    for seed in range(15):
        g = random_graph(10, 0.35, seed)
        v1 = {v for v in g.vertices() if v % 3 == 0}
        if g.induced_subgraph(v1).has_4path() or g.delete_vertices(v1).has_4path():
            continue
        inst = Instance(g, v1, 4)
        for v in g.vertices():
            assert inst.n1(v) == g.neighbors(v) & v1
            assert inst.n2(v) == g.neighbors(v) - v1
            assert inst.deg1(v) == len(inst.n1(v))
            assert inst.deg2(v) == len(inst.n2(v))


def test_classify_v1_vertex():
    inst = make([(3, 0), (3, 1), (4, 2), (5, 6), (6, 0)], v1=[3, 4, 5, 6])
    assert inst.classify_v1_vertex(3) == CONNECTION
    assert inst.classify_v1_vertex(4) == LEAF
    assert inst.classify_v1_vertex(5) == OTHER  # forbidden neighbor
    assert inst.classify_v1_vertex(6) == OTHER
    with pytest.raises(ValueError):
        inst.classify_v1_vertex(0)


def test_components_i():
    inst = make([(0, 1), (3, 0), (3, 2)], v1=[3], n=4)
    assert inst.components_i(2) == [(0, 1), (2,)]
    assert inst.components_i(1) == [(3,)]


def test_components_i_matches_induced_subgraph():
    for seed in range(15):
        g = random_graph(11, 0.3, seed)
        v1 = {v for v in g.vertices() if (v + seed) % 4 == 0}
        if g.induced_subgraph(v1).has_4path() or g.delete_vertices(v1).has_4path():
            continue
        inst = Instance(g, v1, 3)
        for side, members in ((1, v1), (2, set(g.vertices()) - v1)):
            expected = g.induced_subgraph(members).connected_components()
            assert inst.components_i(side) == expected


def test_contains_and_splits():
    # star component {0,1,2} centered at 1, x=4 touching only vertex 0
    inst = make([(1, 0), (1, 2), (4, 0), (4, 3), (5, 2), (5, 6)], v1=[4, 5])
    comp = inst.v2_component_of(0)
    assert comp == (0, 1, 2)
    assert inst.splits(4, comp)
    assert not inst.contains(4, comp)
    assert inst.contains(4, (3,))
    assert not inst.splits(4, (3,))


def test_contains_exact_cover_of_component():
    inst = make([(3, 0), (3, 1), (3, 2), (0, 1)], v1=[3])
    assert inst.contains(3, (0, 1))
    assert inst.contains(3, (2,))


def test_boundary_vertex_star_and_triangle():
    # split star: center 1 is the only component vertex outside N(x)
    inst = make([(1, 0), (1, 2), (4, 0), (4, 3), (5, 2), (5, 6)], v1=[4, 5])
    assert inst.boundary_vertex(4, (0, 1, 2)) == 1
    # split triangle: boundary is the corner not adjacent to x
    tri = make([(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 4), (5, 2)], v1=[3, 5])
    assert tri.boundary_vertex(3, (0, 1, 2)) == 2


def test_boundary_vertex_matches_definition_scan():
    for seed in range(25):
        g = random_graph(10, 0.3, seed)
        v1 = {v for v in g.vertices() if (v + seed) % 3 == 0}
        if g.induced_subgraph(v1).has_4path() or g.delete_vertices(v1).has_4path():
            continue
        inst = Instance(g, v1, 3)
        for x in inst.connection_vertices():
            for comp in inst.split_components(x):
                nbrs = g.neighbors(x)
                scan = [
                    v for v in comp
                    if v not in nbrs and inst.n2(v) & nbrs
                ]
                if len(scan) == 1:
                    assert inst.boundary_vertex(x, comp) == scan[0]


def test_sb_and_sc():
    # x=8 splits two stars (boundaries are their centers 1 and 4) and
    # contains the pair {6,7}
    inst = make(
        [(1, 0), (1, 2), (4, 3), (4, 5), (8, 0), (8, 3), (8, 6), (8, 7), (6, 7)],
        v1=[8],
    )
    assert inst.sb(8) == {1, 4}
    assert inst.sc(8) == {6}


def test_sc_empty_without_contained_pairs():
    inst = make([(1, 0), (1, 2), (4, 0), (4, 3)], v1=[4])
    assert inst.sc(4) == frozenset()


def test_sb_sc_match_per_component_recount():
    for seed in range(25):
        g = random_graph(10, 0.35, seed)
        v1 = {v for v in g.vertices() if (v + seed) % 3 == 0}
        if g.induced_subgraph(v1).has_4path() or g.delete_vertices(v1).has_4path():
            continue
        inst = Instance(g, v1, 3)
        for x in inst.connection_vertices():
            splits = [c for c in inst.components_i(2) if inst.splits(x, c)]
            contained = [c for c in inst.components_i(2) if inst.contains(x, c)]
            assert inst.split_components(x) == splits
            assert inst.contained_components(x) == contained
            boundaries = set()
            ok = True
            for c in splits:
                scan = [v for v in c if v not in g.neighbors(x) and inst.n2(v) & g.neighbors(x)]
                if len(scan) != 1:
                    ok = False
                    break
                boundaries.add(scan[0])
            if ok:
                assert inst.sb(x) == boundaries
            assert inst.sc(x) == {min(c) for c in contained if len(c) == 2}


def test_connection_profile_fixture():
    # one contained singleton, one narrow split, one wide split
    from pvc4.generators import rule_trigger
    import random

    inst = rule_trigger(16, 0)
    x = next(
        x for x in inst.connection_vertices()
        if inst.contained_components(x) and len(inst.split_components(x)) == 2
    )
    prof = inst.connection_profile(x)
    assert (prof.s1, prof.s2, prof.t1, prof.t2) == (1, 0, 1, 1)
    assert len(prof.split_list) == 2
    assert len(prof.contained_list) == 1


def test_connection_profile_two_pendants():
    inst = make([(2, 0), (2, 1)], v1=[2])
    prof = inst.connection_profile(2)
    assert (prof.s1, prof.s2, prof.t1, prof.t2) == (2, 0, 0, 0)


def test_budget_may_go_negative():
    inst = make([(2, 0), (2, 1)], v1=[2], k=0)
    child = inst.with_budget(-1)
    assert child.k == -1


def test_derived_instances_preserve_ids():
    inst = make([(0, 1), (1, 2), (2, 3), (4, 1)], v1=[2], k=3)
    child = inst.remove_vertices({1}, 2)
    assert child.graph.vertices() == [0, 2, 3, 4]
    assert child.k == 2
    moved = inst.move_to_v1(0)
    assert moved.v1 == {0, 2}
    cut = inst.delete_edge(1, 2)
    assert not cut.graph.has_edge(1, 2)
    assert inst.graph.has_edge(1, 2)
