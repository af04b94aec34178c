"""Cross-intersecting set-pair families.

A family is a sequence of pairs (A_i, B_i) of finite sets.  Colorings of
shift graphs translate into such families and back (see constructions),
so counting bounds on the families become bounds on local chromatic
values.  This module holds the family container, the condition checkers,
the classic counting sums, and a canonical backtracking search for the
longest family a bounded palette admits.

Family indices are 1-based everywhere they are reported, matching the
1-based point labels of the shift-graph generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .core import BadParameter, ConditionViolated
from .solvers import _BudgetHit, _Ctx

#: condition modes understood by `check_family`
MODES = ("bollobas", "skew", "ordered", "symmetric")


@dataclass(frozen=True)
class CrossFamily:
    """Indexed pairs (A_i, B_i) of finite sets of non-negative ints."""

    pairs: tuple[tuple[frozenset[int], frozenset[int]], ...]

    @staticmethod
    def of(a_sets, b_sets) -> "CrossFamily":
        a = [frozenset(s) for s in a_sets]
        b = [frozenset(s) for s in b_sets]
        if len(a) != len(b):
            raise BadParameter("need equally many A and B sets")
        for s in a + b:
            for x in s:
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise BadParameter("set elements must be non-negative ints")
        return CrossFamily(tuple(zip(a, b)))

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def ground(self) -> tuple[int, ...]:
        """Sorted union of all member sets."""
        out: set[int] = set()
        for a, b in self.pairs:
            out |= a
            out |= b
        return tuple(sorted(out))

    def to_dict(self) -> dict:
        return {
            "A": [sorted(a) for a, _ in self.pairs],
            "B": [sorted(b) for _, b in self.pairs],
        }

    @staticmethod
    def from_dict(doc: dict) -> "CrossFamily":
        if not isinstance(doc, dict) or "A" not in doc or "B" not in doc:
            raise BadParameter('family document needs "A" and "B" set lists')
        return CrossFamily.of(doc["A"], doc["B"])


def check_family(fam: CrossFamily, mode: str, k: int | None = None) -> None:
    """Raise ConditionViolated at the first failing index pair.

    All modes require A_i and B_i disjoint.  Cross-intersection
    A_i & B_j != {} is required for every i != j in "bollobas" and
    "symmetric" mode, and only for i < j in "skew" and "ordered" mode.
    The palette modes additionally cap unions by k - 1:
    "ordered" caps |A_j | B_i| for i < j, "symmetric" caps |A_i | B_j|
    for every i != j.
    """
    if mode not in MODES:
        raise BadParameter(f"unknown family mode {mode!r}, pick one of {MODES}")
    if mode in ("ordered", "symmetric"):
        if k is None:
            raise BadParameter(f"mode {mode!r} needs the target value k")
        if k < 1:
            raise BadParameter("target value k must be >= 1")
    pairs = fam.pairs
    m = len(pairs)
    for i in range(m):
        a, b = pairs[i]
        if a & b:
            raise ConditionViolated(i + 1, i + 1, "A and B are not disjoint")
    both_ways = mode in ("bollobas", "symmetric")
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            if (i < j or both_ways) and not (pairs[i][0] & pairs[j][1]):
                raise ConditionViolated(i + 1, j + 1, "A_i misses B_j")
    if mode == "ordered":
        for i in range(m):
            for j in range(i + 1, m):
                if len(pairs[j][0] | pairs[i][1]) > k - 1:
                    raise ConditionViolated(
                        i + 1, j + 1, f"|A_j | B_i| exceeds {k - 1}"
                    )
    elif mode == "symmetric":
        for i in range(m):
            for j in range(m):
                if i != j and len(pairs[i][0] | pairs[j][1]) > k - 1:
                    raise ConditionViolated(
                        i + 1, j + 1, f"|A_i | B_j| exceeds {k - 1}"
                    )


def family_ok(fam: CrossFamily, mode: str, k: int | None = None) -> bool:
    try:
        check_family(fam, mode, k)
    except ConditionViolated:
        return False
    return True


def bollobas_sum(fam: CrossFamily) -> Fraction:
    """Sum of 1 / C(|A_i| + |B_i|, |A_i|), exact.

    At most 1 for every family passing check_family(fam, "bollobas"),
    with equality on `complement_family`.
    """
    total = Fraction(0)
    for a, b in fam.pairs:
        total += Fraction(1, comb(len(a) + len(b), len(a)))
    return total


def skew_uniform_bound(r: int, s: int) -> int:
    """Largest length of a family with |A_i| = r, |B_i| = s satisfying
    the skew condition: C(r + s, r)."""
    if r < 0 or s < 0:
        raise BadParameter("set sizes must be non-negative")
    return comb(r + s, r)


def family_size_bound(k: int, mode: str) -> int:
    """Largest m for which a value-k family of the given mode can exist.

    ordered: 3 * 2^(k-1); symmetric: 2^k - 2.  Defined for k >= 2.
    """
    if k < 2:
        raise BadParameter("size bounds are defined for k >= 2")
    if mode == "ordered":
        return 3 * 2 ** (k - 1)
    if mode == "symmetric":
        return 2 ** k - 2
    raise BadParameter(f"no size bound for mode {mode!r}")


def complement_family(n: int, r: int) -> CrossFamily:
    """All r-subsets of 1..n paired with their complements.

    Length C(n, r); satisfies the bollobas condition with sum exactly 1
    and meets the uniform skew bound with s = n - r.
    """
    if not (0 < r < n):
        raise BadParameter("need 0 < r < n")
    universe = frozenset(range(1, n + 1))
    pairs = []
    for c in combinations(range(1, n + 1), r):
        a = frozenset(c)
        pairs.append((a, universe - a))
    return CrossFamily(tuple(pairs))


@dataclass
class FamilySearchResult:
    """Outcome of `max_shift_order`.

    `exhaustive` certifies only that the bounded-palette canonical search
    finished; families over larger palettes are out of its scope.
    """

    k: int
    ground: int
    best_m: int
    certificate: CrossFamily | None
    exhaustive: bool
    nodes: int


def max_shift_order(
    k: int,
    ground: int | None = None,
    budget_nodes: int | None = None,
    budget_ms: float | None = None,
) -> FamilySearchResult:
    """Longest ordered-mode family of target value k over a palette of at
    most `ground` symbols (default 2k), found by canonical backtracking.

    Canonical form searched: B_1 is a prefix {1..j} with j <= k-1 and
    A_1 is everything outside B_1 (enlarging A_1 never hurts, it only
    has to hit later B_j); middle pairs have both sides of size <= k-1
    and introduce fresh symbols as consecutive next integers; the final
    pair takes B_m maximal.  Every family over <= ground symbols is
    symbol-renameable into this form, so a finished search is exhaustive
    for that palette.  Middle prefixes never beat their own closure
    (A_m = {} always closes), so only closures are recorded.
    """
    if k < 2:
        raise BadParameter("target value must be >= 2")
    if ground is None:
        ground = 2 * k
    if ground < 2:
        raise BadParameter("palette must have at least 2 symbols")
    cap = family_size_bound(k, "ordered")
    ctx = _Ctx(budget_nodes, budget_ms)

    universe = list(range(1, ground + 1))
    smalls: list[frozenset[int]] = []
    for r in range(1, k):
        smalls.extend(frozenset(c) for c in combinations(universe, r))
    mid_pairs = [
        (a, b, tuple(sorted(a | b))) for a in smalls for b in smalls if not (a & b)
    ]
    closing_sets: list[frozenset[int]] = [frozenset()] + smalls

    best_m = 0
    best_cert: CrossFamily | None = None

    def try_close(
        b1: frozenset[int],
        mid_a: list[frozenset[int]],
        mid_b: list[frozenset[int]],
        used: int,
    ) -> None:
        nonlocal best_m, best_cert
        m = len(mid_a) + 2
        if m <= best_m or m > cap:
            return
        used_set = frozenset(range(1, used + 1))
        for a_close in closing_sets:
            ctx.tick()
            if not (a_close <= used_set):
                continue
            if len(a_close | b1) > k - 1:
                continue
            if any(len(a_close | b) > k - 1 for b in mid_b):
                continue
            if any(a <= a_close for a in mid_a):
                continue
            # A_1 must hit B_m; add a fresh symbol if the used ones are covered
            fresh = (b1 | a_close) == used_set
            if fresh and used >= ground:
                continue
            g_fin = used + 1 if fresh else used
            gset = frozenset(range(1, g_fin + 1))
            pairs = (
                [(gset - b1, b1)]
                + list(zip(mid_a, mid_b))
                + [(a_close, gset - a_close)]
            )
            best_m = m
            best_cert = CrossFamily(tuple(pairs))
            return

    def extend(
        b1: frozenset[int],
        mid_a: list[frozenset[int]],
        mid_b: list[frozenset[int]],
        used: int,
    ) -> None:
        ctx.tick()
        try_close(b1, mid_a, mid_b, used)
        if len(mid_a) + 3 > cap:
            return
        for a, b, elems in mid_pairs:
            ctx.tick()
            hi = [e for e in elems if e > used]
            if hi and hi != list(range(used + 1, used + 1 + len(hi))):
                continue
            if not (b - b1):
                continue
            if len(a | b1) > k - 1:
                continue
            ok = True
            for i in range(len(mid_a)):
                if not (mid_a[i] & b) or len(a | mid_b[i]) > k - 1:
                    ok = False
                    break
            if not ok:
                continue
            mid_a.append(a)
            mid_b.append(b)
            extend(b1, mid_a, mid_b, used + len(hi))
            mid_a.pop()
            mid_b.pop()

    exhaustive = True
    try:
        for j in range(0, k):
            extend(frozenset(range(1, j + 1)), [], [], j)
    except _BudgetHit:
        exhaustive = False
    if best_cert is not None:
        check_family(best_cert, "ordered", k)
    return FamilySearchResult(k, ground, best_m, best_cert, exhaustive, ctx.nodes)
