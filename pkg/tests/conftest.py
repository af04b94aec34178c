import random

import pytest

from localchrom import Graph, complete_graph, cycle_graph, shift_graph, symmetric_shift_graph


def path_graph(n):
    return Graph(list(range(n)), [(i, i + 1) for i in range(n - 1)])


def random_graph(rng, n, p=0.4):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(list(range(n)), edges)


def random_orientation(rng, g):
    from localchrom import Digraph

    arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edge_list()]
    return Digraph(g.vertices, arcs)


@pytest.fixture(scope="session")
def small_corpus():
    """Hand-picked graphs small enough for the brute oracles."""
    corpus = [
        ("K2", complete_graph(2)),
        ("K3", complete_graph(3)),
        ("K4", complete_graph(4)),
        ("C4", cycle_graph(4)),
        ("C5", cycle_graph(5)),
        ("C6", cycle_graph(6)),
        ("P4", path_graph(4)),
        ("shift4", shift_graph(4)),
        ("symshift3", symmetric_shift_graph(3)),
        ("claw", Graph(list(range(4)), [(0, 1), (0, 2), (0, 3)])),
        ("K4_minus", Graph(list(range(4)), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])),
        ("edgeless", Graph(list(range(3)), [])),
    ]
    return corpus


@pytest.fixture()
def rng():
    return random.Random(0)
