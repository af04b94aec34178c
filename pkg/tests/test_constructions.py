from fractions import Fraction

import pytest

from localchrom import (
    BadParameter,
    Coloring,
    Digraph,
    NotHomomorphism,
    NotOrientation,
    NotProper,
    NotWide,
    TooLarge,
    WrongColorCount,
    alternating_odd_cycle,
    balanced_complete_orientation,
    balanced_pullback_orientation,
    chromatic_number,
    coloring_to_families,
    complete_graph,
    cycle_graph,
    decide_local2,
    directed_local_chromatic,
    directed_local_value,
    families_to_coloring,
    find_homomorphism,
    is_proper,
    local_chromatic,
    local_value,
    mycielski_orientation,
    oriented_shift_with_coloring,
    pullback_orientation,
    shift_graph,
    swide_orientation,
    swide_state,
    sym_directed_shift,
    symmetric_shift_graph,
    wide_orientation,
)


def test_pullback_keeps_value():
    c5 = cycle_graph(5)
    t3 = balanced_complete_orientation(3)
    hom = find_homomorphism(c5, complete_graph(3))
    d = pullback_orientation(c5, hom, t3)
    assert d.underlying.edges == c5.edges
    assert directed_local_chromatic(d).value <= directed_local_chromatic(t3).value


def test_pullback_input_checks():
    c5 = cycle_graph(5)
    with pytest.raises(NotOrientation):
        pullback_orientation(c5, [0] * 5, sym_directed_shift(3))
    t3 = balanced_complete_orientation(3)
    with pytest.raises(BadParameter):
        pullback_orientation(c5, [0, 1], t3)
    with pytest.raises(NotHomomorphism):
        pullback_orientation(c5, [0, 0, 1, 2, 1], t3)


def test_balanced_pullback_bound(small_corpus):
    for name, g in small_corpus:
        if not g.edges:
            continue
        rep = chromatic_number(g)
        d = balanced_pullback_orientation(g, rep.witness)
        r = rep.witness.distinct()
        assert directed_local_value(d, rep.witness) <= r // 2 + 1, name


def test_balanced_pullback_rejects_improper():
    with pytest.raises(NotProper):
        balanced_pullback_orientation(complete_graph(3), Coloring([0, 0, 1]))


def test_oriented_shift_arc_structure():
    d, _ = oriented_shift_with_coloring(4)
    for u, v in d.arcs:
        (a, b), (c, e) = d.vertices[u], d.vertices[v]
        assert b == c
        if e == a:
            # reversal pair: the lexicographically smaller label shoots first
            assert (a, b) < (c, e)


def test_translation_round_trip_ordered():
    g = shift_graph(5)
    col = local_chromatic(g).witness
    fam, mode = coloring_to_families(g, col)
    assert mode == "ordered"
    g2, col2 = families_to_coloring(fam, mode)
    assert g2.vertices == g.vertices
    assert is_proper(g2, col2)[0]
    union_cap = max(len(a | b) for a, b in fam.pairs)
    assert local_value(g2, col2) <= union_cap + 1


def test_translation_round_trip_symmetric():
    g = symmetric_shift_graph(4)
    col = chromatic_number(g).witness
    fam, mode = coloring_to_families(g, col)
    assert mode == "symmetric"
    g2, col2 = families_to_coloring(fam, mode)
    assert g2.vertices == g.vertices
    assert is_proper(g2, col2)[0]


def test_translation_rejects_improper():
    g = shift_graph(4)
    with pytest.raises(NotProper):
        coloring_to_families(g, Coloring([0] * g.n))


def test_translation_accepts_serialized_labels():
    # labels flattened to "(i,j)" strings by a JSON round trip still work
    from localchrom import graph_from_dict, graph_to_dict

    g = graph_from_dict(graph_to_dict(shift_graph(4)))
    assert isinstance(g.vertices[0], str)
    col = local_chromatic(g).witness
    fam, mode = coloring_to_families(g, col)
    assert mode == "ordered"
    assert len(fam) == 4


def test_swide_state_frozen_example():
    st = swide_state((0, 1, 1, 1), 2)
    assert st.color == 1
    assert st.p == (2, 2, 2, 2)
    assert st.q == (0, 1, 2, 3)
    assert st.big_p == (Fraction(1, 2),) * 4
    assert st.big_q == (Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1))
    assert st.eps == Fraction(4, 1)
    assert st.tau == 1
    assert st.ones == (2, 3, 4)
    assert dict(st.drift) == {
        2: Fraction(47, 6),
        3: Fraction(49, 6),
        4: Fraction(17, 2),
    }
    assert dict(st.frac) == {
        2: Fraction(5, 6),
        3: Fraction(1, 6),
        4: Fraction(1, 2),
    }
    assert st.selected == frozenset({3})


def test_swide_state_validation():
    with pytest.raises(BadParameter):
        swide_state((0, 1, 1), 1)
    with pytest.raises(BadParameter):
        swide_state((0, 3, 1), 2)
    with pytest.raises(BadParameter):
        swide_state((1, 1, 1), 2)
    with pytest.raises(BadParameter):
        swide_state((0, 0, 1), 2)
    with pytest.raises(BadParameter):
        swide_state((0, 2, 2), 2)


def test_swide_orientation_covered_case():
    res = swide_orientation(3, 4)
    rep = res.report
    assert rep.selection_ok and rep.edges_ok
    assert res.digraph is not None
    assert res.digraph.is_orientation
    assert directed_local_value(res.digraph, res.natural) == rep.value
    assert rep.value <= rep.tau + 1
    doc = res.report_dict()
    assert doc["property1_ok"] and doc["property2_ok"]
    assert doc["failures"] == []
    assert doc["value"] == rep.value


def test_swide_orientation_uncovered_case():
    res = swide_orientation(2, 4)
    rep = res.report
    assert rep.selection_ok
    assert not rep.edges_ok
    assert res.digraph is None
    assert len(rep.edge_failures) == 3
    doc = res.report_dict()
    assert doc["property2_ok"] is False
    assert len(doc["failures"]) == 3
    assert all(isinstance(a, str) and isinstance(b, str) for a, b in doc["failures"])


def test_swide_orientation_vertex_cap():
    with pytest.raises(TooLarge):
        swide_orientation(3, 8, max_vertices=100)


def test_mycielski_orientation_of_one_arc():
    d = Digraph(["a", "b"], [(0, 1)])
    lift = mycielski_orientation(d)
    assert lift.n == 5
    lab = {v: i for i, v in enumerate(lift.vertices)}
    want = {
        (lab[(0, "a")], lab[(0, "b")]),
        (lab[(1, "a")], lab[(0, "b")]),
        (lab[(0, "a")], lab[(1, "b")]),
        (lab[(1, "a")], lab["z"]),
        (lab[(1, "b")], lab["z"]),
    }
    assert lift.arcs == frozenset(want)
    assert directed_local_chromatic(lift).value == 3


def test_mycielski_orientation_chain():
    d = Digraph(["a", "b"], [(0, 1)])
    assert directed_local_chromatic(d).value == 2
    lift1 = mycielski_orientation(d)
    lift2 = mycielski_orientation(lift1)
    assert lift2.n == 11
    assert len(lift2.underlying.edges) == 20
    assert directed_local_chromatic(lift2).value == 4


def test_mycielski_orientation_rejects_two_cycles():
    with pytest.raises(NotOrientation):
        mycielski_orientation(sym_directed_shift(3))


def test_decide_local2_positive_branch():
    d, _ = oriented_shift_with_coloring(4)
    out = decide_local2(d)
    assert out.value_le_2
    assert is_proper(d.underlying, out.coloring)[0]
    assert directed_local_value(d, out.coloring) <= 2
    hom = out.universal_hom
    uni = out.universal
    assert all((hom[a], hom[b]) in uni.arcs for a, b in d.arc_list())
    assert out.obstruction is None


def test_decide_local2_negative_branch():
    tt3 = Digraph(range(3), [(0, 1), (0, 2), (1, 2)])
    out = decide_local2(tt3)
    assert not out.value_le_2
    alt = out.obstruction
    hom = out.obstruction_hom
    assert alt.n == 2 * out.obstruction_h + 1
    want = alternating_odd_cycle(out.obstruction_h)
    assert alt.arcs == want.arcs
    assert all((hom[a], hom[b]) in tt3.arcs for a, b in alt.arc_list())
    assert out.coloring is None


def test_wide_orientation_on_cycle():
    c6 = cycle_graph(6)
    col = Coloring([1, 2, 3, 4, 3, 2])
    d = wide_orientation(c6, col)
    assert d.underlying.edges == c6.edges
    assert directed_local_value(d, col) <= 2


def test_wide_orientation_input_checks():
    c6 = cycle_graph(6)
    with pytest.raises(NotWide):
        wide_orientation(c6, Coloring([1, 2, 3, 1, 2, 3]))
    with pytest.raises(WrongColorCount):
        wide_orientation(c6, Coloring([0, 1, 0, 1, 0, 1]))
