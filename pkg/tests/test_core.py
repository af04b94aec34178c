import numpy as np
import pytest

from localchrom import (
    BadParameter,
    Coloring,
    Digraph,
    DuplicateLabel,
    Graph,
    NotProper,
    PartialColoring,
    RainbowBiclique,
    SelfLoop,
    UnknownEndpoint,
    build_digraph,
    build_graph,
    directed_local_value,
    find_rainbow_biclique,
    is_proper,
    local_value,
    walk_reach,
)


def test_graph_basics():
    g = Graph(["a", "b", "c"], [(0, 1), (1, 2), (1, 0)])
    assert g.n == 3
    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.adj == ((1,), (0, 2), (1,))
    assert g.degree(1) == 2
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)
    assert g.index_of("c") == 2


def test_graph_rejects_bad_input():
    with pytest.raises(DuplicateLabel):
        Graph(["a", "a"], [])
    with pytest.raises(SelfLoop):
        Graph(["a", "b"], [(0, 0)])
    with pytest.raises(UnknownEndpoint):
        Graph(["a", "b"], [(0, 5)])
    with pytest.raises(UnknownEndpoint):
        Graph(["a"], []).index_of("zzz")


def test_build_graph_uses_labels():
    g = build_graph(["x", "y", "z"], [("x", "z")])
    assert g.has_edge(0, 2)
    d = build_digraph(["x", "y"], [("y", "x")])
    assert (1, 0) in d.arcs


def test_graph_equality_and_hash():
    g1 = Graph([0, 1], [(0, 1)])
    g2 = Graph([0, 1], [(0, 1)])
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != Graph([0, 1], [])


def test_induced_subgraph():
    g = Graph(list(range(4)), [(0, 1), (1, 2), (2, 3)])
    sub = g.induced([1, 2, 3])
    assert sub.vertices == (1, 2, 3)
    assert sub.edges == frozenset({(0, 1), (1, 2)})
    with pytest.raises(BadParameter):
        g.induced([1, 1])


def test_digraph_orientation_flag():
    d = Digraph([0, 1], [(0, 1)])
    assert d.is_orientation
    both = Digraph([0, 1], [(0, 1), (1, 0)])
    assert not both.is_orientation
    assert both.underlying.edges == frozenset({(0, 1)})
    assert d.out_neighbors[0] == (1,) and d.in_neighbors[1] == (0,)


def test_coloring_canonical():
    c = Coloring([5, 5, 2, 7, 2])
    assert c.canonical().colors == (0, 0, 1, 2, 1)
    assert c.distinct() == 3
    with pytest.raises(BadParameter):
        Coloring([-1])


def test_is_proper_and_first_violation():
    g = Graph(list(range(3)), [(0, 1), (1, 2)])
    ok, bad = is_proper(g, Coloring([1, 2, 1]))
    assert ok and bad is None
    ok, bad = is_proper(g, Coloring([1, 1, 2]))
    assert not ok and bad == (0, 1)
    with pytest.raises(PartialColoring):
        is_proper(g, Coloring([1, 2]))


def test_local_value_hand_computed():
    # star: center sees every leaf color
    star = Graph(list(range(4)), [(0, 1), (0, 2), (0, 3)])
    assert local_value(star, Coloring([0, 1, 1, 1])) == 2
    assert local_value(star, Coloring([0, 1, 2, 3])) == 4
    with pytest.raises(NotProper):
        local_value(star, Coloring([0, 0, 1, 1]))


def test_directed_local_value_counts_out_neighbors_only():
    d = Digraph(list(range(3)), [(0, 1), (0, 2)])
    assert directed_local_value(d, Coloring([0, 1, 2])) == 3
    assert directed_local_value(d, Coloring([0, 1, 1])) == 2
    # reversing the arcs drops the value: sinks see nothing
    rev = Digraph(list(range(3)), [(1, 0), (2, 0)])
    assert directed_local_value(rev, Coloring([0, 1, 2])) == 2


def test_walk_reach_matches_matrix_power():
    g = Graph(list(range(4)), [(0, 1), (1, 2), (2, 3)])
    adj = np.array(g.adjacency_matrix(), dtype=int)
    for length in (1, 2, 3, 4):
        want = np.linalg.matrix_power(adj, length) > 0
        assert np.array_equal(walk_reach(g, length), want)
    with pytest.raises(BadParameter):
        walk_reach(g, 0)


def test_rainbow_biclique_check_and_search():
    # C4 with all-distinct colors is itself a rainbow (2,2)
    c4 = Graph(list(range(4)), [(0, 1), (1, 2), (2, 3), (0, 3)])
    rb = RainbowBiclique((0, 2), (1, 3))
    assert rb.check(c4, Coloring([0, 1, 2, 3]))
    assert not rb.check(c4, Coloring([0, 1, 0, 1]))
    found = find_rainbow_biclique(c4, Coloring([0, 1, 2, 3]), 2, 2)
    assert found is not None and found.check(c4, Coloring([0, 1, 2, 3]))
    assert find_rainbow_biclique(c4, Coloring([0, 1, 0, 1]), 2, 2) is None
    with pytest.raises(NotProper):
        find_rainbow_biclique(c4, Coloring([0, 0, 1, 1]), 2, 2)
