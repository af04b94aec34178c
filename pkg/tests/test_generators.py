import math
from itertools import combinations

import networkx as nx
import pytest

from localchrom import (
    alternating_odd_cycle,
    balanced_complete_orientation,
    complete_graph,
    cycle_graph,
    directed_local_value,
    generalized_mycielski,
    is_proper,
    kneser,
    oriented_shift_with_coloring,
    schrijver,
    shift_graph,
    sym_directed_shift,
    symmetric_shift_graph,
    walk_reach,
    wide_universal,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list())
    return h


@pytest.mark.parametrize("m", range(2, 8))
def test_shift_graph_counts(m):
    g = shift_graph(m)
    assert g.n == math.comb(m, 2)
    assert len(g.edges) == math.comb(m, 3)
    assert g.vertices == tuple((i, j) for i, j in combinations(range(1, m + 1), 2))


def test_shift_graph_is_triangle_free():
    for m in (4, 5, 6):
        g = shift_graph(m)
        assert not walk_reach(g, 3).diagonal().any()


def test_shift_adjacency_is_chaining():
    g = shift_graph(4)
    lab = {v: i for i, v in enumerate(g.vertices)}
    assert (lab[(1, 2)], lab[(2, 3)]) in g.edges
    assert (lab[(1, 2)], lab[(3, 4)]) not in g.edges
    assert (lab[(1, 3)], lab[(3, 4)]) in g.edges


@pytest.mark.parametrize("m", range(2, 7))
def test_symmetric_shift_counts(m):
    g = symmetric_shift_graph(m)
    assert g.n == m * (m - 1)


def test_symmetric_shift_contains_plain_shift():
    for m in (3, 4, 5):
        s = symmetric_shift_graph(m)
        keep = [i for i, lab in enumerate(s.vertices) if lab[0] < lab[1]]
        sub = s.induced(keep)
        h = shift_graph(m)
        assert sub.vertices == h.vertices
        assert sub.edges == h.edges


def test_sym_directed_shift_has_two_cycles():
    d = sym_directed_shift(3)
    assert d.n == 6
    assert not d.is_orientation
    # (1,2) -> (2,1) and back
    lab = {v: i for i, v in enumerate(d.vertices)}
    assert (lab[(1, 2)], lab[(2, 1)]) in d.arcs
    assert (lab[(2, 1)], lab[(1, 2)]) in d.arcs


def test_oriented_shift_is_orientation_with_value_two():
    for m in (3, 4, 5):
        d, col = oriented_shift_with_coloring(m)
        assert d.is_orientation
        under = d.underlying
        want = symmetric_shift_graph(m)
        assert under.edges == want.edges
        assert is_proper(under, col)[0]
        assert directed_local_value(d, col) == 2


def test_kneser_petersen():
    g = kneser(5, 2)
    assert g.n == 10
    assert len(g.edges) == 15
    assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())


def test_kneser_counts():
    g = kneser(6, 2)
    assert g.n == math.comb(6, 2)
    # each 2-set is disjoint from C(4,2) others
    assert len(g.edges) == math.comb(6, 2) * math.comb(4, 2) // 2


def test_schrijver_is_induced_cycle_for_n5():
    g = schrijver(5, 2)
    assert g.n == 5
    assert len(g.edges) == 5
    assert nx.is_isomorphic(to_nx(g), nx.cycle_graph(5))


def test_schrijver_vertices_are_subset_of_kneser():
    kn = kneser(6, 2)
    sc = schrijver(6, 2)
    assert set(sc.vertices) <= set(kn.vertices)


def test_mycielski_matches_reference_mycielskian():
    for base, nxbase in ((complete_graph(2), nx.complete_graph(2)),
                         (cycle_graph(5), nx.cycle_graph(5))):
        ours = generalized_mycielski(base, 2)
        ref = nx.mycielskian(nxbase)
        assert nx.is_isomorphic(to_nx(ours), ref)


@pytest.mark.parametrize("r", (1, 2, 3))
def test_mycielski_of_edge_is_odd_cycle(r):
    g = generalized_mycielski(complete_graph(2), r)
    assert nx.is_isomorphic(to_nx(g), nx.cycle_graph(2 * r + 1))


def test_wide_universal_level_one_is_complete():
    g, col = wide_universal(1, 4)
    assert nx.is_isomorphic(to_nx(g), nx.complete_graph(4))
    assert col.distinct() == 4


@pytest.mark.parametrize("s,t,n", [(2, 4, 28), (2, 5, 75), (2, 6, 186), (3, 4, 76)])
def test_wide_universal_sizes(s, t, n):
    g, col = wide_universal(s, t)
    assert g.n == n
    assert col.distinct() == t
    assert is_proper(g, col)[0]


def test_alternating_odd_cycle_shape():
    for h in (1, 2, 3):
        d = alternating_odd_cycle(h)
        assert d.n == 2 * h + 1
        assert d.is_orientation
        assert nx.is_isomorphic(to_nx(d.underlying), nx.cycle_graph(2 * h + 1))
    # one source/sink alternation broken only at the odd closing vertex
    a2 = alternating_odd_cycle(2)
    assert sorted(a2.arc_list()) == [(0, 1), (2, 1), (2, 3), (4, 0), (4, 3)]


def test_balanced_tournament_outdegrees():
    t4 = balanced_complete_orientation(4)
    assert t4.is_orientation
    assert sorted(t4.out_degree(v) for v in range(4)) == [1, 1, 2, 2]
    t5 = balanced_complete_orientation(5)
    assert [t5.out_degree(v) for v in range(5)] == [2, 2, 2, 2, 2]
    for r in range(2, 7):
        t = balanced_complete_orientation(r)
        assert len(t.underlying.edges) == math.comb(r, 2)
        assert max(t.out_degree(v) for v in range(r)) <= (r - 1 + 1) // 2


def test_plain_families():
    k4 = complete_graph(4)
    assert len(k4.edges) == 6
    c6 = cycle_graph(6)
    assert len(c6.edges) == 6
    assert all(c6.degree(v) == 2 for v in range(6))
