from fractions import Fraction
from math import comb

import pytest

from localchrom import (
    BadParameter,
    ConditionViolated,
    CrossFamily,
    bollobas_sum,
    check_family,
    complement_family,
    families_to_coloring,
    family_ok,
    family_size_bound,
    is_proper,
    local_value,
    max_shift_order,
    skew_uniform_bound,
)


def test_cross_family_construction():
    fam = CrossFamily.of([{1}, {2}], [{2}, {1}])
    assert len(fam) == 2
    assert fam.ground == (1, 2)
    assert fam.to_dict() == {"A": [[1], [2]], "B": [[2], [1]]}
    back = CrossFamily.from_dict(fam.to_dict())
    assert back.pairs == fam.pairs


def test_cross_family_validation():
    with pytest.raises(BadParameter):
        CrossFamily.of([{1}], [{1}, {2}])
    with pytest.raises(BadParameter):
        CrossFamily.of([{-1}], [{2}])
    with pytest.raises(BadParameter):
        CrossFamily.of([{True}], [{2}])
    with pytest.raises(BadParameter):
        CrossFamily.from_dict({"A": [[1]]})


@pytest.mark.parametrize("n,r", [(2, 1), (3, 2), (4, 2), (5, 2), (5, 3)])
def test_complement_family_is_tight(n, r):
    fam = complement_family(n, r)
    assert len(fam) == comb(n, r)
    check_family(fam, "bollobas")
    assert bollobas_sum(fam) == 1
    # uniform (r, n-r) families cannot be longer under the skew condition
    assert len(fam) == skew_uniform_bound(r, n - r)


def test_subfamily_sums_below_one():
    fam = complement_family(4, 2)
    sub = CrossFamily(fam.pairs[:-1])
    assert bollobas_sum(sub) < 1
    assert bollobas_sum(sub) == Fraction(5, 6)


def test_mixed_sizes_still_bounded():
    # non-uniform family passing the bollobas condition keeps sum <= 1
    fam = CrossFamily.of([{1}, {2, 3}], [{2}, {1, 4}])
    check_family(fam, "bollobas")
    assert bollobas_sum(fam) <= 1


def test_disjointness_is_required():
    fam = CrossFamily.of([{1, 2}], [{2}])
    with pytest.raises(ConditionViolated) as err:
        check_family(fam, "bollobas")
    assert err.value.i == 1 and err.value.j == 1
    assert "disjoint" in err.value.reason


def test_cross_intersection_checks():
    # skew: only i < j pairs must meet, so A_2 may miss B_1
    fam = CrossFamily.of([{1}, {2}], [{3}, {1}])
    check_family(fam, "skew")
    assert family_ok(fam, "skew")
    # bollobas needs the j > i direction too
    with pytest.raises(ConditionViolated) as err:
        check_family(fam, "bollobas")
    assert (err.value.i, err.value.j) == (2, 1)
    assert err.value.reason == "A_i misses B_j"


def test_palette_modes_cap_unions():
    fam = CrossFamily.of([{1}, {2, 3}], [{4}, {1}])
    check_family(fam, "ordered", k=4)
    with pytest.raises(ConditionViolated) as err:
        check_family(fam, "ordered", k=3)
    assert err.value.reason.startswith("|A_j | B_i| exceeds")
    with pytest.raises(BadParameter):
        check_family(fam, "ordered")
    with pytest.raises(BadParameter):
        check_family(fam, "nope")


def test_symmetric_mode_checks_both_directions():
    fam = CrossFamily.of([{1}, {2}], [{2}, {1}])
    check_family(fam, "symmetric", k=3)
    big = CrossFamily.of([{1, 3}, {2}], [{2}, {1, 4}])
    # |A_1 | B_2| = 4 > 2 even though |A_2 | B_1| = 2
    with pytest.raises(ConditionViolated):
        check_family(big, "symmetric", k=3)


def test_size_bounds():
    assert family_size_bound(2, "ordered") == 6
    assert family_size_bound(3, "ordered") == 12
    assert family_size_bound(2, "symmetric") == 2
    assert family_size_bound(4, "symmetric") == 14
    with pytest.raises(BadParameter):
        family_size_bound(1, "ordered")
    with pytest.raises(BadParameter):
        family_size_bound(3, "bollobas")


def test_skew_uniform_bound_values():
    assert skew_uniform_bound(1, 1) == 2
    assert skew_uniform_bound(2, 2) == 6
    assert skew_uniform_bound(0, 5) == 1


def test_family_search_smallest_case():
    res = max_shift_order(2)
    assert res.k == 2
    assert res.best_m == 4
    assert res.exhaustive
    assert res.nodes == 94
    cert = res.certificate
    assert len(cert) == 4
    check_family(cert, "ordered", k=2)
    g, col = families_to_coloring(cert, "ordered")
    assert g.n == comb(4, 2)
    assert is_proper(g, col)[0]
    assert local_value(g, col) <= 2


def test_family_search_respects_ground_cap():
    wide = max_shift_order(2, ground=6)
    assert wide.best_m == 4
    assert wide.ground == 6
    with pytest.raises(BadParameter):
        max_shift_order(1)
    with pytest.raises(BadParameter):
        max_shift_order(3, ground=1)


def test_family_search_budget_stops_early():
    res = max_shift_order(3, budget_nodes=50)
    assert not res.exhaustive
    assert res.nodes >= 50
    if res.certificate is not None:
        check_family(res.certificate, "ordered", k=3)
