"""Named verification suites: each one recomputes a family of claims
from scratch with the exact solvers and reports per-claim pass/fail
rows.  `run_suite` executes one suite, `run_all` every registered one.

Suites are deterministic: searches use node budgets, never wall-clock
budgets, and the only randomness is driven by the explicit seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .constructions import (
    balanced_pullback_orientation,
    coloring_to_families,
    decide_local2,
    families_to_coloring,
    mycielski_orientation,
    oriented_shift_with_coloring,
    swide_orientation,
    wide_orientation,
)
from .core import (
    Coloring,
    Digraph,
    Graph,
    RainbowBiclique,
    UnknownSuite,
    build_digraph,
    directed_local_value,
    find_rainbow_biclique,
    local_value,
    walk_reach,
)
from .generators import (
    alternating_odd_cycle,
    balanced_complete_orientation,
    complete_graph,
    cycle_graph,
    generalized_mycielski,
    shift_graph,
    sym_directed_shift,
    symmetric_shift_graph,
    wide_universal,
)
from .setsystems import (
    CrossFamily,
    bollobas_sum,
    complement_family,
    family_ok,
    family_size_bound,
    max_shift_order,
    skew_uniform_bound,
)
from .solvers import (
    chromatic_number,
    directed_local_chromatic,
    find_coloring_without_rainbow,
    independence_number,
    is_s_wide,
    local_chromatic,
    max_directed_local_chromatic,
    min_directed_local_chromatic,
)


@dataclass
class SuiteCheck:
    suite: str
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: list[SuiteCheck]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


@lru_cache(maxsize=None)
def _chi(g: Graph):
    return chromatic_number(g)


@lru_cache(maxsize=None)
def _psi(g: Graph):
    return local_chromatic(g)


@lru_cache(maxsize=None)
def _alpha(g: Graph):
    return independence_number(g)


@lru_cache(maxsize=None)
def _dpsi(d: Digraph):
    return directed_local_chromatic(d)


@lru_cache(maxsize=None)
def _dpsi_min(g: Graph):
    return min_directed_local_chromatic(g)


@lru_cache(maxsize=None)
def _dpsi_max(g: Graph):
    return max_directed_local_chromatic(g)


def _row(suite: str, name: str, passed: bool, detail: str = "") -> SuiteCheck:
    return SuiteCheck(suite, name, bool(passed), detail)


def _first_coord_coloring(g) -> Coloring:
    return Coloring(lab[0] for lab in g.vertices)


def _path_graph(n: int) -> Graph:
    return Graph(list(range(n)), [(i, i + 1) for i in range(n - 1)])


def _star_graph(leaves: int) -> Graph:
    return Graph(list(range(leaves + 1)), [(0, i + 1) for i in range(leaves)])


def _biclique(a: int, b: int) -> Graph:
    return Graph(list(range(a + b)), [(i, a + j) for i in range(a) for j in range(b)])


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def _suite_shift_chromatic(seed: int) -> list[SuiteCheck]:
    """Shift graphs: size, triangle-freeness, exact chromatic number, and
    the two local-chromatic bands."""
    s = "shift-chromatic"
    rows = []
    for m in range(2, 11):
        g = shift_graph(m)
        rows.append(
            _row(s, f"edge count of shift({m}) is C({m},3)",
                 len(g.edges) == comb(m, 3), f"{len(g.edges)} edges")
        )
        if g.edges:
            tri = bool(walk_reach(g, 3).diagonal().any())
            rows.append(_row(s, f"shift({m}) is triangle-free", not tri))
        want = max(1, math.ceil(math.log2(m)))
        rep = _chi(g)
        rows.append(
            _row(s, f"chi(shift({m})) == {want}",
                 rep.exact and rep.value == want, f"got {rep.value}")
        )
    for m in range(3, 9):
        g = shift_graph(m)
        chi = _chi(g).value
        psi = _psi(g)
        k = chi - 1  # band index: 2^k < m <= 2^(k+1)
        if m > 3 * 2 ** (k - 1):
            rows.append(
                _row(s, f"psi(shift({m})) == chi in the top band",
                     psi.exact and psi.value == chi, f"psi={psi.value} chi={chi}")
            )
        else:
            rows.append(
                _row(s, f"psi(shift({m})) within {{chi-1, chi}} in the low band",
                     psi.exact and psi.value in (chi - 1, chi),
                     f"psi={psi.value} chi={chi}")
            )
    return rows


def _suite_oriented_shift(seed: int) -> list[SuiteCheck]:
    """The canonical orientation of the symmetric shift graph has
    directed local value 2 under the first-coordinate coloring."""
    s = "oriented-shift"
    rows = []
    for m in range(3, 9):
        d, colors = oriented_shift_with_coloring(m)
        base = symmetric_shift_graph(m)
        rows.append(_row(s, f"oriented shift({m}) is an orientation", d.is_orientation))
        rows.append(
            _row(s, f"oriented shift({m}) covers the symmetric shift graph",
                 d.underlying == base)
        )
        val = directed_local_value(d, colors)
        rows.append(
            _row(s, f"first-coordinate value on oriented shift({m}) == 2",
                 val == 2, f"got {val}")
        )
    for m in (3, 4):
        d, _ = oriented_shift_with_coloring(m)
        rep = _dpsi(d)
        rows.append(
            _row(s, f"directed local chromatic of oriented shift({m}) == 2",
                 rep.exact and rep.value == 2, f"got {rep.value}")
        )
    return rows


def _suite_sym_shift(seed: int) -> list[SuiteCheck]:
    """Symmetric shift graphs: independence number with its split-pair
    witness, chromatic number, fractional chromatic value below 4, and
    the local chromatic facts at m = 3, 4."""
    s = "sym-shift"
    rows = []
    for m in range(2, 7):
        g = symmetric_shift_graph(m)
        half = (m + 1) // 2
        alpha_want = half * (m // 2)
        rep = _alpha(g)
        rows.append(
            _row(s, f"alpha(symshift({m})) == {alpha_want}",
                 rep.exact and rep.value == alpha_want, f"got {rep.value}")
        )
        witness = rep.witness
        indep = all(
            not g.has_edge(u, v) for i, u in enumerate(witness) for v in witness[i + 1:]
        )
        rows.append(_row(s, f"alpha witness on symshift({m}) is independent", indep))
        canonical = [
            g.index_of((i, j))
            for i in range(1, half + 1)
            for j in range(half + 1, m + 1)
        ]
        canon_ok = len(canonical) == alpha_want and all(
            not g.has_edge(u, v)
            for i, u in enumerate(canonical)
            for v in canonical[i + 1:]
        )
        rows.append(
            _row(s, f"split pairs form a maximum independent set in symshift({m})",
                 canon_ok)
        )
    for m in range(2, 6):
        g = symmetric_shift_graph(m)
        alpha_want = ((m + 1) // 2) * (m // 2)
        chi_want = next(k for k in range(1, 32) if comb(k, (k + 1) // 2) >= m)
        chi = _chi(g)
        rows.append(
            _row(s, f"chi(symshift({m})) == {chi_want}",
                 chi.exact and chi.value == chi_want, f"got {chi.value}")
        )
        frac = Fraction(m * (m - 1), alpha_want)
        rows.append(
            _row(s, f"fractional chromatic value of symshift({m}) below 4",
                 frac < 4, f"value {frac}")
        )
    psi3 = _psi(symmetric_shift_graph(3))
    rows.append(
        _row(s, "psi(symshift(3)) == 3",
             psi3.exact and psi3.value == 3, f"got {psi3.value}")
    )
    psi4 = _psi(symmetric_shift_graph(4))
    rows.append(
        _row(s, "psi(symshift(4)) >= 3",
             psi4.exact and psi4.value >= 3, f"got {psi4.value}")
    )
    return rows


def _suite_rainbow(seed: int) -> list[SuiteCheck]:
    """Rainbow complete bipartite subgraphs: the first-coordinate
    coloring of ordered shift graphs never shows one with sides (2, 2)
    and on symmetric shift graphs never one with sides (2, 3); on the
    symmetric shift graph of order 4 a rainbow (2, 2) is unavoidable for
    every proper coloring."""
    s = "rainbow-bicliques"
    rows = []
    for m in range(3, 9):
        g = shift_graph(m)
        c = _first_coord_coloring(g)
        found = find_rainbow_biclique(g, c, 2, 2)
        rows.append(
            _row(s, f"no rainbow (2,2) under first-coordinate coloring of shift({m})",
                 found is None)
        )
    for m in range(3, 7):
        g = symmetric_shift_graph(m)
        c = _first_coord_coloring(g)
        found = find_rainbow_biclique(g, c, 2, 3)
        rows.append(
            _row(s, f"no rainbow (2,3) under first coordinates of symshift({m})",
                 found is None)
        )
    for m in (4, 5):
        g = symmetric_shift_graph(m)
        c = _first_coord_coloring(g)
        found = find_rainbow_biclique(g, c, 2, 2)
        rows.append(
            _row(s, f"rainbow (2,2) exists under first coordinates of symshift({m})",
                 found is not None and found.check(g, c))
        )
    g4 = symmetric_shift_graph(4)
    c4 = _first_coord_coloring(g4)
    fixed = RainbowBiclique(
        (g4.index_of((1, 2)), g4.index_of((3, 4))),
        (g4.index_of((2, 3)), g4.index_of((4, 1))),
    )
    rows.append(
        _row(s, "the split witness (12,34 | 23,41) is a rainbow (2,2) in symshift(4)",
             fixed.check(g4, c4))
    )
    avoider = find_coloring_without_rainbow(g4, 2, 2)
    rows.append(
        _row(s, "every proper coloring of symshift(4) has a rainbow (2,2)",
             avoider is None)
    )
    return rows


def _duality_rows(s: str, name: str, d: Digraph, expect: bool) -> list[SuiteCheck]:
    out = decide_local2(d)
    rows = [
        _row(s, f"{name}: value <= 2 is {expect}", out.value_le_2 == expect)
    ]
    if out.value_le_2 and expect:
        val = directed_local_value(d, out.coloring)
        rows.append(_row(s, f"{name}: witness coloring has value <= 2", val <= 2))
        hom_ok = all(
            (out.universal_hom[a], out.universal_hom[b]) in out.universal.arcs
            for a, b in d.arcs
        )
        rows.append(_row(s, f"{name}: map into two-way shift preserves arcs", hom_ok))
    if not out.value_le_2 and not expect:
        hom_ok = all(
            (out.obstruction_hom[a], out.obstruction_hom[b]) in d.arcs
            for a, b in out.obstruction.arcs
        )
        rows.append(_row(s, f"{name}: alternating odd cycle maps in", hom_ok))
    return rows


def _dichotomy_agrees(d: Digraph) -> bool:
    """decide_local2 against the exact solver, certificates included."""
    out = decide_local2(d)
    rep = directed_local_chromatic(d)
    if not rep.exact or out.value_le_2 != (rep.value <= 2):
        return False
    if out.value_le_2:
        return directed_local_value(d, out.coloring) <= 2
    return all(
        (out.obstruction_hom[a], out.obstruction_hom[b]) in d.arcs
        for a, b in out.obstruction.arcs
    )


def _suite_duality(seed: int) -> list[SuiteCheck]:
    """Directed local value 2 is decidable in polynomial time: either a
    class coloring plus a map into the two-way shift digraph, or an
    alternating odd cycle mapping in.  Cross-validated against the exact
    solver on cycle orientations and random oriented graphs."""
    s = "duality"
    rows = []
    for h in (1, 2, 3):
        rep = _dpsi(alternating_odd_cycle(h))
        rows.append(
            _row(s, f"alternating odd cycle h={h} has exact value 3",
                 rep.exact and rep.value == 3, f"got {rep.value}")
        )
    rows += _duality_rows(s, "two-way shift(3)", sym_directed_shift(3), True)
    rows += _duality_rows(s, "two-cycle", build_digraph([0, 1], [(0, 1), (1, 0)]), True)
    for m in (3, 4):
        d, _ = oriented_shift_with_coloring(m)
        rows += _duality_rows(s, f"oriented shift({m})", d, True)
    rows += _duality_rows(s, "balanced tournament on 3", balanced_complete_orientation(3), True)
    rows += _duality_rows(s, "balanced tournament on 4", balanced_complete_orientation(4), False)
    for h in (1, 2, 3):
        rows += _duality_rows(s, f"alternating cycle h={h}", alternating_odd_cycle(h), False)
    k2 = build_digraph(["a", "b"], [("a", "b")])
    rows += _duality_rows(s, "mycielski lift of an arc", mycielski_orientation(k2), False)
    for n in (3, 5):
        g = cycle_graph(n)
        edges = g.edge_list()
        agree = sum(
            _dichotomy_agrees(
                Digraph(
                    g.vertices,
                    [
                        (v, u) if (mask >> i) & 1 else (u, v)
                        for i, (u, v) in enumerate(edges)
                    ],
                )
            )
            for mask in range(1 << len(edges))
        )
        rows.append(
            _row(s, f"dichotomy matches the exact solver on all {n}-cycle orientations",
                 agree == 1 << len(edges), f"{agree}/{1 << len(edges)}")
        )
    rng = random.Random(seed)
    agree = 0
    for _ in range(200):
        n = rng.randint(4, 10)
        arcs = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.35:
                    arcs.append((u, v) if rng.random() < 0.5 else (v, u))
        agree += _dichotomy_agrees(Digraph(list(range(n)), arcs))
    rows.append(
        _row(s, "dichotomy matches the exact solver on 200 random oriented graphs",
             agree == 200, f"{agree}/200")
    )
    return rows


def _suite_balanced_complete(seed: int) -> list[SuiteCheck]:
    """Orientation minima: complete graphs need floor(r/2) + 1, the
    balanced tournament attains it, and pulling it back along an optimal
    coloring caps the minimum for every graph, with equality whenever
    the clique number matches the chromatic number."""
    s = "balanced-complete"
    rows = []
    for r in range(2, 6):
        g = complete_graph(r)
        want = r // 2 + 1
        rep = _dpsi_min(g)
        rows.append(
            _row(s, f"orientation minimum of K_{r} == {want}",
                 rep.exact and rep.value == want, f"got {rep.value}")
        )
        w = rep.witness
        rows.append(
            _row(s, f"K_{r} minimum witness evaluates to its value",
                 w.digraph.underlying == g
                 and directed_local_value(w.digraph, w.coloring) == rep.value)
        )
        bal = _dpsi(balanced_complete_orientation(r))
        rows.append(
            _row(s, f"balanced tournament on {r} has value {want}",
                 bal.exact and bal.value == want, f"got {bal.value}")
        )
    equality_corpus = [
        ("4-cycle", cycle_graph(4)),
        ("6-cycle", cycle_graph(6)),
        ("path on 4", _path_graph(4)),
        ("shift(4)", shift_graph(4)),
        ("K4 minus an edge", Graph(list(range(4)), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])),
    ]
    for name, g in equality_corpus:
        chi = _chi(g).value
        rep = _dpsi_min(g)
        rows.append(
            _row(s, f"{name}: orientation minimum == floor(chi/2)+1 (clique meets chi)",
                 rep.exact and rep.value == chi // 2 + 1,
                 f"got {rep.value}, chi {chi}")
        )
    for name, g in [("5-cycle", cycle_graph(5)), ("shift(5)", shift_graph(5))]:
        chi_rep = _chi(g)
        oriented = balanced_pullback_orientation(g, chi_rep.witness)
        val = directed_local_value(oriented, chi_rep.witness)
        bound = chi_rep.value // 2 + 1
        rows.append(
            _row(s, f"{name}: pulled-back orientation stays within floor(chi/2)+1",
                 val <= bound, f"value {val} bound {bound}")
        )
        rep = _dpsi_min(g)
        rows.append(
            _row(s, f"{name}: orientation minimum within floor(chi/2)+1",
                 rep.exact and rep.value <= bound, f"got {rep.value}")
        )
    return rows


def _suite_mycielski(seed: int) -> list[SuiteCheck]:
    """Mycielski lifts raise the attainable directed local value in step
    with the chromatic number: arc -> alternating 5-cycle -> an oriented
    11-vertex triangle-free graph of value 4."""
    s = "mycielski-chain"
    rows = []
    for r in (1, 2, 3):
        m = generalized_mycielski(complete_graph(2), r)
        n = 2 * r + 1
        degs_ok = m.n == n and all(len(m.adj[v]) == 2 for v in range(m.n))
        rows.append(
            _row(s, f"{r}-level lift of an edge is the odd cycle on {n}",
                 degs_ok and len(m.edges) == n and _connected(m))
        )
        chi = _chi(m)
        rows.append(
            _row(s, f"odd cycle on {n} has chromatic number 3",
                 chi.exact and chi.value == 3)
        )
    grotzsch = generalized_mycielski(cycle_graph(5), 2)
    chi_g = _chi(grotzsch)
    tri = bool(walk_reach(grotzsch, 3).diagonal().any())
    rows.append(
        _row(s, "2-level lift of the 5-cycle: 11 vertices, 20 edges, chi 4, no triangle",
             grotzsch.n == 11 and len(grotzsch.edges) == 20
             and chi_g.exact and chi_g.value == 4 and not tri)
    )
    d0 = build_digraph(["a", "b"], [("a", "b")])
    rows.append(_row(s, "level-0 chain start has value 2", _dpsi(d0).value == 2))
    d1 = mycielski_orientation(d0)
    under = d1.underlying
    shape_ok = (
        under.n == 5
        and _connected(under)
        and all(len(under.adj[v]) == 2 for v in range(5))
        and sum(1 for v in range(5) if d1.out_degree(v) == 1) == 1
    )
    rows.append(
        _row(s, "lift of an arc is an alternating odd cycle on 5 vertices", shape_ok)
    )
    rep1 = _dpsi(d1)
    rows.append(
        _row(s, "lift of an arc reaches value 3",
             d1.is_orientation and rep1.exact and rep1.value == 3, f"got {rep1.value}")
    )
    mx_c5 = _dpsi_max(cycle_graph(5))
    rows.append(
        _row(s, "orientation maximum of the 5-cycle is 3",
             mx_c5.exact and mx_c5.value == 3, f"got {mx_c5.value}")
    )
    d2 = mycielski_orientation(d1)
    rep2 = _dpsi(d2)
    rows.append(
        _row(s, "second lift reaches value 4 on 11 vertices",
             d2.n == 11 and d2.is_orientation and rep2.exact and rep2.value == 4,
             f"got {rep2.value}")
    )
    return rows


def _suite_wide_small(seed: int) -> list[SuiteCheck]:
    """2-wide colorings with 2h colors yield orientations of value h."""
    s = "wide-small"
    rows = []
    c6 = cycle_graph(6)
    wide4 = Coloring([1, 2, 3, 4, 3, 2])
    ok, _ = is_s_wide(c6, wide4, 2)
    rows.append(_row(s, "the 4-coloring 1,2,3,4,3,2 of the 6-cycle is 2-wide", ok))
    ori = wide_orientation(c6, wide4)
    val = directed_local_value(ori, wide4)
    rows.append(
        _row(s, "its extracted orientation has value 2",
             ori.is_orientation and ori.underlying == c6 and val <= 2, f"value {val}")
    )
    narrow, bad = is_s_wide(c6, Coloring([1, 2, 3, 1, 2, 3]), 2)
    rows.append(
        _row(s, "the repeating 3-coloring of the 6-cycle is not 2-wide",
             not narrow and bad is not None)
    )
    for t, cap in ((4, 2), (6, 3)):
        g, natural = wide_universal(2, t)
        okw, _ = is_s_wide(g, natural, 2)
        rows.append(
            _row(s, f"natural coloring of the (2,{t}) universal graph is 2-wide", okw)
        )
        ori = wide_orientation(g, natural)
        val = directed_local_value(ori, natural)
        rows.append(
            _row(s, f"extracted orientation of the (2,{t}) universal graph"
                    f" has value <= {cap}",
                 ori.is_orientation and ori.underlying == g and val <= cap,
                 f"value {val}")
        )
    g24, nat24 = wide_universal(2, 4)
    ori24 = wide_orientation(g24, nat24)
    rows.append(
        _row(s, "the (2,4) orientation hits value exactly 2",
             directed_local_value(ori24, nat24) == 2)
    )
    return rows


def _swide_ladder(t: int, max_vertices: int) -> list[dict]:
    rows = []
    s = 2
    while True:
        expected = t * (s ** (t - 1) - (s - 1) ** (t - 1))
        if expected > max_vertices:
            break
        res = swide_orientation(s, t)
        rows.append(
            {
                "s": s,
                "t": t,
                "vertices": res.graph.n,
                "edges": len(res.graph.edges),
                "tau": res.report.tau,
                "property1_ok": res.report.selection_ok,
                "property2_ok": res.report.edges_ok,
                "failure_count": len(res.report.edge_failures),
                "value": res.report.value,
                "_result": res,
            }
        )
        s += 1
    return rows


def _suite_wide_universal(seed: int) -> list[SuiteCheck]:
    """Wide universal graphs: sizes, wideness of the natural coloring,
    and the selection dichotomy: either explicit uncovered edges, or an
    orientation of value at most ceil(t/4) + 1."""
    s = "wide-universal"
    rows = []
    rows.append(
        _row(s, "the (1,4) universal graph is the complete graph on 4",
             wide_universal(1, 4)[0].edges == complete_graph(4).edges)
    )
    for st, want in (((2, 4), 28), ((2, 5), 75), ((2, 6), 186), ((3, 4), 76)):
        sv, tv = st
        g, _ = wide_universal(sv, tv)
        formula = tv * (sv ** (tv - 1) - (sv - 1) ** (tv - 1))
        rows.append(
            _row(s, f"universal graph ({sv},{tv}) has {want} vertices",
                 g.n == want == formula, f"got {g.n}")
        )
    ladder = _swide_ladder(4, 1000)
    threshold = None
    for entry in ladder:
        sv = entry["s"]
        res = entry["_result"]
        tau = entry["tau"]
        okw, _ = is_s_wide(res.graph, res.natural, sv)
        rows.append(_row(s, f"natural coloring of ({sv},4) is {sv}-wide", okw))
        if entry["property2_ok"]:
            good = (
                res.digraph is not None
                and res.digraph.is_orientation
                and res.digraph.underlying == res.graph
                and entry["value"] is not None
                and entry["value"] <= tau + 1
            )
            rows.append(
                _row(s, f"({sv},4) covered: orientation value <= {tau + 1}",
                     good, f"value {entry['value']}")
            )
            if threshold is None:
                threshold = sv
        else:
            rows.append(
                _row(s, f"({sv},4) uncovered: explicit failure edges reported",
                     res.digraph is None and entry["failure_count"] > 0,
                     f"{entry['failure_count']} uncovered edges")
            )
    top = ladder[-1]["s"] if ladder else 0
    rows.append(
        _row(s, "selection dichotomy swept the whole ladder", bool(ladder),
             f"coverage threshold s={threshold if threshold else 'none'}"
             f" (ladder up to s={top})")
    )
    res26 = swide_orientation(2, 6)
    tau26 = res26.report.tau
    if res26.report.edges_ok:
        rows.append(
            _row(s, f"(2,6) covered: orientation value <= {tau26 + 1}",
                 res26.digraph is not None and res26.report.value <= tau26 + 1,
                 f"value {res26.report.value}")
        )
    else:
        rows.append(
            _row(s, "(2,6) uncovered: explicit failure edges reported",
                 res26.digraph is None and len(res26.report.edge_failures) > 0,
                 f"{len(res26.report.edge_failures)} uncovered edges")
        )
    return rows


def _suite_bollobas(seed: int) -> list[SuiteCheck]:
    """The set-pair inequality: reciprocal binomial sums of
    cross-intersecting pairs never exceed 1, with equality on the
    complement construction."""
    s = "bollobas"
    rows = []
    for n, r in ((2, 1), (3, 2), (4, 2)):
        fam = complement_family(n, r)
        rows.append(
            _row(s, f"complement family ({n},{r}) satisfies the two-way condition",
                 family_ok(fam, "bollobas"))
        )
        total = bollobas_sum(fam)
        rows.append(
            _row(s, f"complement family ({n},{r}) sums to exactly 1",
                 total == 1, f"sum {total}")
        )
        sub = CrossFamily(fam.pairs[:-1])
        rows.append(
            _row(s, f"dropping a pair from ({n},{r}) keeps the sum below 1",
                 family_ok(sub, "bollobas") and bollobas_sum(sub) < 1)
        )
    mixed = CrossFamily.of([[1], [2, 3]], [[2], [1]])
    rows.append(
        _row(s, "a non-uniform valid family sums below 1",
             family_ok(mixed, "bollobas") and bollobas_sum(mixed) == Fraction(5, 6))
    )
    broken = CrossFamily.of([[1], [2]], [[1], [1]])
    rows.append(
        _row(s, "overlapping pairs are rejected", not family_ok(broken, "bollobas"))
    )
    return rows


def _suite_frankl(seed: int) -> list[SuiteCheck]:
    """The skew uniform bound: r-against-s families under the one-way
    condition never exceed C(r+s, r) pairs, and complement families
    attain it."""
    s = "frankl"
    rows = []
    for n, r in ((2, 1), (3, 2), (4, 2), (5, 2)):
        fam = complement_family(n, r)
        bound = skew_uniform_bound(r, n - r)
        rows.append(
            _row(s, f"complement family ({n},{r}) meets the skew bound {bound}",
                 family_ok(fam, "skew") and len(fam) == bound)
        )
        padded = CrossFamily(fam.pairs + (fam.pairs[0],))
        rows.append(
            _row(s, f"exceeding the skew bound for ({n},{r}) breaks the condition",
                 not family_ok(padded, "skew"))
        )
    rng = random.Random(seed)
    within = 0
    for _ in range(1000):
        r = rng.randint(1, 3)
        t = rng.randint(1, 3)
        ground = list(range(1, r + t + rng.randint(1, 3)))
        pairs: list[tuple[frozenset, frozenset]] = []
        for _ in range(64):
            a = frozenset(rng.sample(ground, r))
            b = frozenset(rng.sample(ground, t))
            if a & b:
                continue
            if all(pa & b for pa, _ in pairs):
                pairs.append((a, b))
        fam = CrossFamily(tuple(pairs))
        if family_ok(fam, "skew") and len(fam) <= skew_uniform_bound(r, t):
            within += 1
    rows.append(
        _row(s, "1000 random uniform one-way families respect the binomial bound",
             within == 1000, f"{within}/1000")
    )
    return rows


def _suite_family_search(seed: int) -> list[SuiteCheck]:
    """Canonical family search: target value 2 tops out at 4 points
    exhaustively; target value 3 stays within its counting bound and
    every certificate translates back into a shift coloring."""
    s = "family-search"
    rows = []
    res2 = max_shift_order(2)
    rows.append(
        _row(s, "search at target 2 is exhaustive for its palette", res2.exhaustive)
    )
    rows.append(
        _row(s, "largest point count at target 2 is 4",
             res2.best_m == 4, f"got {res2.best_m}")
    )
    cert_ok = res2.certificate is not None and family_ok(res2.certificate, "ordered", 2)
    rows.append(_row(s, "target-2 certificate satisfies the ordered conditions", cert_ok))
    if cert_ok:
        g, colors = families_to_coloring(res2.certificate, "ordered")
        val = local_value(g, colors)
        rows.append(
            _row(s, "target-2 certificate translates to a value-2 shift coloring",
                 g.n == shift_graph(4).n and val <= 2, f"value {val}")
        )
        back, mode = coloring_to_families(g, colors)
        rows.append(
            _row(s, "translated coloring folds back into an ordered family",
                 mode == "ordered" and family_ok(back, "ordered", 2))
        )
    psi5 = _psi(shift_graph(5))
    rows.append(
        _row(s, "no 5-point family at target 2: psi(shift(5)) == 3",
             psi5.exact and psi5.value == 3, f"got {psi5.value}")
    )
    res3 = max_shift_order(3, budget_nodes=400_000)
    bound3 = family_size_bound(3, "ordered")
    rows.append(
        _row(s, f"target-3 incumbent within the counting bound {bound3}",
             4 <= res3.best_m <= bound3,
             f"got {res3.best_m}, exhaustive={res3.exhaustive}")
    )
    cert3 = res3.certificate
    ok3 = cert3 is not None and family_ok(cert3, "ordered", 3)
    rows.append(_row(s, "target-3 certificate satisfies the ordered conditions", ok3))
    if ok3:
        g3, colors3 = families_to_coloring(cert3, "ordered")
        val3 = local_value(g3, colors3)
        rows.append(
            _row(s, "target-3 certificate translates to a value-3 shift coloring",
                 val3 <= 3, f"value {val3}")
        )
    return rows


def _ordering_corpus() -> list[tuple[str, Graph]]:
    corpus: list[tuple[str, Graph]] = []
    for r in range(2, 6):
        corpus.append((f"K_{r}", complete_graph(r)))
    for n in range(3, 7):
        corpus.append((f"C_{n}", cycle_graph(n)))
    corpus.append(("P_4", _path_graph(4)))
    corpus.append(("star with 3 leaves", _star_graph(3)))
    for m in (3, 4, 5):
        corpus.append((f"shift({m})", shift_graph(m)))
    corpus.append(("symshift(3)", symmetric_shift_graph(3)))
    return corpus


def _suite_ordering(seed: int) -> list[SuiteCheck]:
    """The quantity chain on a small corpus: orientation minimum <=
    orientation maximum <= local chromatic <= chromatic, the orientation
    minimum never beats floor(chi/2) + 1, and local chromatic 2 happens
    exactly on bipartite graphs with an edge."""
    s = "ordering"
    rows = []
    bipartite_match = True
    for name, g in _ordering_corpus():
        chi = _chi(g)
        psi = _psi(g)
        mn = _dpsi_min(g)
        mx = _dpsi_max(g)
        exact = all(r.exact for r in (chi, psi, mn, mx))
        chain = mn.value <= mx.value <= psi.value <= chi.value
        rows.append(
            _row(s, f"{name}: min {mn.value} <= max {mx.value} <= psi {psi.value}"
                    f" <= chi {chi.value}", exact and chain)
        )
        rows.append(
            _row(s, f"{name}: orientation minimum within floor(chi/2)+1",
                 mn.value <= chi.value // 2 + 1,
                 f"min {mn.value} bound {chi.value // 2 + 1}")
        )
        if g.edges and (psi.value == 2) != (chi.value == 2):
            bipartite_match = False
    rows.append(
        _row(s, "local chromatic 2 exactly on bipartite corpus graphs",
             bipartite_match)
    )
    return rows


def _suite_outdegree(seed: int) -> list[SuiteCheck]:
    """Averaging on near-balanced complete bipartite graphs: every
    orientation has a vertex of out-degree at least ceil(t/4)."""
    s = "outdegree-average"
    rows = []
    rng = random.Random(seed)
    for t in range(4, 9):
        a = (t + 1) // 2
        b = t - a
        g = _biclique(a, b)
        edges = g.edge_list()
        need = -(-t // 4)

        def max_out(mask: int) -> int:
            deg = [0] * g.n
            for i, (u, v) in enumerate(edges):
                if (mask >> i) & 1:
                    deg[v] += 1
                else:
                    deg[u] += 1
            return max(deg)

        if t == 4:
            worst = min(max_out(mask) for mask in range(1 << len(edges)))
            rows.append(
                _row(s, f"all orientations of K_{{{a},{b}}} have out-degree >= {need}",
                     worst >= need, f"worst {worst}")
            )
        samples = [rng.getrandbits(len(edges)) for _ in range(100)]
        ok = all(max_out(mask) >= need for mask in samples)
        rows.append(
            _row(s, f"100 sampled orientations of K_{{{a},{b}}} hit out-degree {need}",
                 ok)
        )
    return rows


SUITES: dict[str, tuple] = {
    "shift-chromatic": (_suite_shift_chromatic, "shift graph sizes, chromatic numbers, local bands"),
    "oriented-shift": (_suite_oriented_shift, "canonical shift orientation has directed value 2"),
    "sym-shift": (_suite_sym_shift, "symmetric shift independence, chromatic and local bounds"),
    "rainbow-bicliques": (_suite_rainbow, "rainbow complete bipartite behaviour of shift colorings"),
    "duality": (_suite_duality, "value-2 dichotomy: class coloring or alternating odd cycle"),
    "balanced-complete": (_suite_balanced_complete, "orientation minima via balanced tournaments"),
    "mycielski-chain": (_suite_mycielski, "Mycielski lifts raising the directed value"),
    "wide-small": (_suite_wide_small, "orientations extracted from 2-wide colorings"),
    "wide-universal": (_suite_wide_universal, "wide universal graphs and selection orientations"),
    "bollobas": (_suite_bollobas, "reciprocal binomial sums of set-pair families"),
    "frankl": (_suite_frankl, "one-way uniform families meet the binomial bound"),
    "family-search": (_suite_family_search, "canonical search for longest ordered families"),
    "ordering": (_suite_ordering, "quantity chain on a small corpus"),
    "outdegree-average": (_suite_outdegree, "orientations of balanced bicliques need big out-degrees"),
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    fn, _ = SUITES[name]
    return SuiteResult(name, fn(seed))


def run_all(seed: int = 0) -> list[SuiteResult]:
    return [run_suite(name, seed) for name in SUITES]


def wide_threshold_experiment(
    t: int = 4, s_min: int = 2, s_max: int | None = None, max_vertices: int = 1000
) -> list[dict]:
    """Sweep the wide universal graphs for growing s while they fit
    under the vertex cap, reporting coverage and the value of the
    extracted orientation.  The empirical coverage threshold is the
    first s whose report says property2_ok."""
    rows = []
    s = s_min
    while s_max is None or s <= s_max:
        expected = t * (s ** (t - 1) - (s - 1) ** (t - 1))
        if expected > max_vertices:
            break
        res = swide_orientation(s, t)
        row = {"s": s, "t": t, "vertices": res.graph.n, "edges": len(res.graph.edges)}
        row.update(res.report_dict())
        rows.append(row)
        s += 1
    return rows


def family_search_experiment(
    k: int,
    ground: int | None = None,
    budget_nodes: int | None = 400_000,
    budget_ms: float | None = None,
) -> dict:
    """Run the canonical family search and return a JSON-ready report."""
    res = max_shift_order(k, ground, budget_nodes, budget_ms)
    return {
        "k": res.k,
        "ground": res.ground,
        "best_m": res.best_m,
        "bound": family_size_bound(k, "ordered"),
        "exhaustive": res.exhaustive,
        "nodes": res.nodes,
        "certificate": res.certificate.to_dict() if res.certificate else None,
    }
