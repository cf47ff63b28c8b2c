import random
from itertools import combinations, permutations

import pytest

from pvc4 import Graph


def complete_graph(n: int) -> Graph:
    return Graph(vertices=range(n), edges=combinations(range(n), 2))


def brute_force_has_4path(g: Graph) -> bool:
    verts = g.vertices()
    return any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
        for a, b, c, d in permutations(verts, 4)
    )


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    g = Graph(vertices=range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


@pytest.fixture
def p4():
    return Graph(vertices=range(4), edges=[(0, 1), (1, 2), (2, 3)])
