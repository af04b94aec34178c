"""Constructive routines: orientations pulled back along homomorphisms,
shift-coloring/set-family translations, orientations extracted from wide
colorings, Mycielski lifts, and the dichotomy decision for directed
local value 2.

Everything here either returns a certified object or raises a structured
error; nothing is approximate.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .core import (
    BadParameter,
    Coloring,
    Digraph,
    Graph,
    NotHomomorphism,
    NotOrientation,
    NotProper,
    NotWide,
    TooLarge,
    WrongColorCount,
    WrongGraphShape,
    directed_local_value,
    is_proper,
)
from .generators import (
    APEX,
    alternating_odd_cycle,
    balanced_complete_orientation,
    generalized_mycielski,
    shift_graph,
    sym_directed_shift,
    symmetric_shift_graph,
    wide_universal,
)
from .setsystems import CrossFamily, check_family
from .solvers import is_s_wide


def pullback_orientation(g: Graph, hom, oriented: Digraph) -> Digraph:
    """Orient g by pulling an orientation back along a homomorphism.

    `hom` maps vertex indices of g to vertex indices of `oriented`; an
    edge {u, v} becomes the arc (u, v) exactly when (hom u, hom v) is an
    arc.  The directed local value of the result never exceeds that of
    `oriented`: out-neighborhoods map into out-neighborhoods.
    """
    if not isinstance(oriented, Digraph) or not oriented.is_orientation:
        raise NotOrientation("target must be an orientation")
    f = tuple(int(x) for x in hom)
    if len(f) != g.n:
        raise BadParameter(f"map covers {len(f)} vertices, graph has {g.n}")
    if any(not (0 <= x < oriented.n) for x in f):
        raise BadParameter("map image out of range")
    arcs = []
    for u, v in g.edge_list():
        if (f[u], f[v]) in oriented.arcs:
            arcs.append((u, v))
        elif (f[v], f[u]) in oriented.arcs:
            arcs.append((v, u))
        else:
            raise NotHomomorphism(
                f"edge ({u}, {v}) maps to non-adjacent pair ({f[u]}, {f[v]})"
            )
    return Digraph(g.vertices, arcs)


def balanced_pullback_orientation(g: Graph, coloring: Coloring) -> Digraph:
    """Orient g along a proper coloring composed with the balanced
    orientation of the complete graph on the palette.

    With r palette colors the result has directed local value at most
    floor(r/2) + 1 under `coloring` itself.
    """
    ok, bad = is_proper(g, coloring)
    if not ok:
        raise NotProper(f"coloring is not proper, edge {bad} is monochromatic")
    palette = sorted(set(coloring))
    pos = {c: i for i, c in enumerate(palette)}
    if len(palette) == 1:
        return Digraph(g.vertices, [])
    tourney = balanced_complete_orientation(len(palette))
    return pullback_orientation(g, [pos[coloring[v]] for v in range(g.n)], tourney)


def oriented_shift_with_coloring(m: int) -> tuple[Digraph, Coloring]:
    """The canonical orientation of the symmetric shift graph together
    with its first-coordinate coloring.

    Arcs run (x, y) -> (y, z) for pairwise distinct x, y, z; the edge
    between (x, y) and (y, x) runs upward from the lexicographically
    smaller label.  Out-neighborhoods of the first-coordinate coloring
    are monochromatic, so its directed local value is 2.
    """
    base = symmetric_shift_graph(m)
    idx = base.index_of
    arcs = []
    for x, y in base.vertices:
        for z in range(1, m + 1):
            if z == y:
                continue
            if z == x:
                if x < y:
                    arcs.append((idx((x, y)), idx((y, x))))
            else:
                arcs.append((idx((x, y)), idx((y, z))))
    d = Digraph(base.vertices, arcs)
    colors = Coloring(lab[0] for lab in base.vertices)
    return d, colors


_PAIR_LABEL = re.compile(r"\((\d+),(\d+)\)\Z")


def _as_pair(lab) -> tuple[int, int] | None:
    """Pair label, also recovering tuples flattened to "(i,j)" strings
    by JSON serialization."""
    if (
        isinstance(lab, tuple)
        and len(lab) == 2
        and all(isinstance(c, int) and not isinstance(c, bool) for c in lab)
    ):
        return lab
    if isinstance(lab, str):
        m = _PAIR_LABEL.match(lab)
        if m:
            return int(m.group(1)), int(m.group(2))
    return None


def _shift_form(g: Graph) -> tuple[str, int]:
    """Classify a graph as an ordered ("ordered") or full ("symmetric")
    pair-label shift graph and return its point count."""
    labs = tuple(_as_pair(lab) for lab in g.vertices)
    if not labs or any(lab is None for lab in labs):
        raise WrongGraphShape("vertices must be labeled by integer pairs")
    m = max(max(a, b) for a, b in labs)
    lset = set(labs)
    ordered = {(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)}
    full = {(i, j) for i in range(1, m + 1) for j in range(1, m + 1) if i != j}
    if lset == ordered:
        mode, reference = "ordered", shift_graph(m)
    elif lset == full:
        mode, reference = "symmetric", symmetric_shift_graph(m)
    else:
        raise WrongGraphShape("labels are not a complete pair system")
    mine = {
        frozenset((labs[u], labs[v])) for u, v in g.edges
    }
    theirs = {
        frozenset((reference.vertices[u], reference.vertices[v]))
        for u, v in reference.edges
    }
    if mine != theirs:
        raise WrongGraphShape("edge set is not the shift adjacency")
    return mode, m


def coloring_to_families(g: Graph, coloring: Coloring) -> tuple[CrossFamily, str]:
    """Translate a proper coloring of a shift graph into its set-pair
    family: A_i collects the colors of pairs leaving point i, B_i the
    colors of pairs entering it.  Returns the family and the detected
    mode ("ordered" or "symmetric")."""
    mode, m = _shift_form(g)
    ok, bad = is_proper(g, coloring)
    if not ok:
        raise NotProper(f"coloring is not proper, edge {bad} is monochromatic")
    a_sets: list[set[int]] = [set() for _ in range(m + 1)]
    b_sets: list[set[int]] = [set() for _ in range(m + 1)]
    for v, lab in enumerate(g.vertices):
        i, j = _as_pair(lab)
        a_sets[i].add(coloring[v])
        b_sets[j].add(coloring[v])
    return CrossFamily.of(a_sets[1:], b_sets[1:]), mode


def families_to_coloring(fam: CrossFamily, mode: str) -> tuple[Graph, Coloring]:
    """Translate a set-pair family back into a shift-graph coloring via
    c(i, j) = min(A_i & B_j).  The family must satisfy the intersection
    conditions of its mode; the union sizes then bound the local value
    of the result."""
    m = len(fam)
    if mode == "ordered":
        if m < 2:
            raise BadParameter("ordered translation needs at least 2 pairs")
        g = shift_graph(m)
        check_family(fam, "skew")
    elif mode == "symmetric":
        if m < 2:
            raise BadParameter("symmetric translation needs at least 2 pairs")
        g = symmetric_shift_graph(m)
        check_family(fam, "bollobas")
    else:
        raise BadParameter(f"unknown translation mode {mode!r}")
    colors = []
    for i, j in g.vertices:
        colors.append(min(fam.pairs[i - 1][0] & fam.pairs[j - 1][1]))
    return g, Coloring(colors)


def wide_orientation(g: Graph, coloring: Coloring) -> Digraph:
    """Extract an orientation of directed local value at most h from a
    2-wide coloring with exactly 2h colors, h >= 2, evaluated under the
    same coloring.

    2-wideness forces adjacent vertices to see disjoint neighborhood
    palettes, so vertices seeing >= h colors induce a bipartite subgraph
    whose components split the palette in half; a balanced bipartite
    tournament between the halves caps their out-palettes at ceil(h/2).
    Every other edge points away from the vertex seeing < h colors.
    """
    wide, bad = is_s_wide(g, coloring, 2)
    if not wide:
        raise NotWide(f"coloring is not 2-wide, walk joins pair {bad}")
    palette = sorted(set(coloring))
    if len(palette) < 4 or len(palette) % 2:
        raise WrongColorCount(
            f"need an even palette of at least 4 colors, got {len(palette)}"
        )
    h = len(palette) // 2
    half = (h + 1) // 2
    full_palette = frozenset(palette)
    n = g.n
    seen_colors = [frozenset(coloring[u] for u in g.adj[v]) for v in range(n)]
    is_high = [len(seen_colors[v]) >= h for v in range(n)]

    # split each nontrivial high component into its two palette halves
    v_side: dict[int, int] = {}
    v_h1: dict[int, tuple[int, ...]] = {}
    v_h2: dict[int, tuple[int, ...]] = {}
    visited = [False] * n
    for v0 in range(n):
        if not is_high[v0] or visited[v0]:
            continue
        comp = [v0]
        side = {v0: 0}
        visited[v0] = True
        queue = deque([v0])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if is_high[u] and not visited[u]:
                    visited[u] = True
                    side[u] = 1 - side[v]
                    comp.append(u)
                    queue.append(u)
        if len(comp) == 1:
            continue
        ha = seen_colors[v0]
        assert len(ha) == h
        hb = full_palette - ha
        h1 = tuple(sorted(ha))
        h2 = tuple(sorted(hb))
        for w in comp:
            assert seen_colors[w] == (ha if side[w] == 0 else hb)
            v_side[w] = side[w]
            v_h1[w] = h1
            v_h2[w] = h2

    arcs = []
    for u, v in g.edge_list():
        if is_high[u] and is_high[v]:
            assert v_side[u] != v_side[v] and v_h1[u] == v_h1[v]
            x, y = (u, v) if v_side[u] == 1 else (v, u)
            a = v_h1[x].index(coloring[x])
            b = v_h2[x].index(coloring[y])
            arcs.append((x, y) if (b - a) % h < half else (y, x))
        elif is_high[u]:
            arcs.append((v, u))
        elif is_high[v]:
            arcs.append((u, v))
        else:
            arcs.append((u, v))
    return Digraph(g.vertices, arcs)


@dataclass(frozen=True)
class SwideVertexState:
    """Exact bookkeeping for one wide-universal vertex: parity-split
    deficiency sums, their normalizations, and the selected color set."""

    vector: tuple[int, ...]
    s: int
    color: int
    evens: tuple[int, ...]
    odds: tuple[int, ...]
    p: tuple[int, ...]
    q: tuple[int, ...]
    big_p: tuple[Fraction, ...]
    big_q: tuple[Fraction, ...]
    eps: Fraction
    tau: int
    ones: tuple[int, ...]
    drift: tuple[tuple[int, Fraction], ...]
    frac: tuple[tuple[int, Fraction], ...]
    selected: frozenset[int]


def swide_state(vector, s: int) -> SwideVertexState:
    """Compute the selection state of a wide-universal vertex.

    Positions are 1-based.  p/q accumulate the deficiencies s - f(i)
    over even/odd-valued positions; the first position contributes only
    half its deficiency to the normalized running fraction of its own
    parity.  Positions holding a 1 are ranked by the fractional part of
    their drift Q_i - P_color + 2 * eps and the tau = ceil(t/4) smallest
    are selected (all of them when tau suffices), ties to the smaller
    position.
    """
    f = tuple(int(x) for x in vector)
    t = len(f)
    if s < 2:
        raise BadParameter("selection state needs s >= 2")
    if t < 2:
        raise BadParameter("vector must have at least 2 positions")
    if any(x < 0 or x > s for x in f):
        raise BadParameter("entries must lie in 0..s")
    if f.count(0) != 1 or 1 not in f:
        raise BadParameter("need exactly one 0 and at least one 1")
    color = f.index(0) + 1
    evens = tuple(i for i in range(1, t + 1) if f[i - 1] % 2 == 0)
    odds = tuple(i for i in range(1, t + 1) if f[i - 1] % 2 == 1)
    p_run: list[int] = []
    q_run: list[int] = []
    pr = qr = 0
    for i in range(1, t + 1):
        d = s - f[i - 1]
        if f[i - 1] % 2 == 0:
            pr += d
        else:
            qr += d
        p_run.append(pr)
        q_run.append(qr)
    pt, qt = pr, qr
    # the zero position puts s into pt; a 1 puts s-1 >= 1 into qt
    assert pt >= s and qt >= s - 1
    head = Fraction(s - f[0], 2)
    if f[0] % 2 == 0:
        big_p = tuple((Fraction(x) - head) / pt for x in p_run)
        big_q = tuple(Fraction(x, qt) for x in q_run)
    else:
        big_p = tuple(Fraction(x, pt) for x in p_run)
        big_q = tuple((Fraction(x) - head) / qt for x in q_run)
    eps = Fraction(t, s - 1)
    tau = -(-t // 4)
    ones = tuple(i for i in range(1, t + 1) if f[i - 1] == 1)
    anchor = big_p[color - 1]
    drift = tuple((i, big_q[i - 1] - anchor + 2 * eps) for i in ones)
    frac = tuple((i, d - floor(d)) for i, d in drift)
    if len(ones) <= tau:
        selected = frozenset(ones)
    else:
        ranked = sorted(frac, key=lambda item: (item[1], item[0]))
        selected = frozenset(i for i, _ in ranked[:tau])
    return SwideVertexState(
        f, s, color, evens, odds, tuple(p_run), tuple(q_run),
        big_p, big_q, eps, tau, ones, drift, frac, selected,
    )


@dataclass
class PropertyReport:
    """Checked facts about a selection family on a wide universal graph:
    selection sizes stay within tau, and every edge is covered (one
    endpoint selects the other's color).  `value` is the directed local
    value of the extracted orientation under the natural coloring, when
    it exists."""

    tau: int
    selection_ok: bool
    selection_failures: tuple[int, ...]
    edges_ok: bool
    edge_failures: tuple[tuple[int, int], ...]
    value: int | None


@dataclass
class SwideOrientationResult:
    graph: Graph
    natural: Coloring
    states: tuple[SwideVertexState, ...]
    digraph: Digraph | None
    report: PropertyReport

    def report_dict(self) -> dict:
        """JSON-ready report: property1 is the selection-size cap,
        property2 is edge coverage; failures name the uncovered edges
        by vertex label."""
        from .io import label_str

        labs = self.graph.vertices
        rep = self.report
        return {
            "tau": rep.tau,
            "property1_ok": rep.selection_ok,
            "property2_ok": rep.edges_ok,
            "failures": [
                [label_str(labs[u]), label_str(labs[v])]
                for u, v in rep.edge_failures
            ],
            "selection_failures": [label_str(labs[v]) for v in rep.selection_failures],
            "value": rep.value,
        }


def swide_orientation(
    s: int, t: int, max_vertices: int | None = None
) -> SwideOrientationResult:
    """Build the wide universal graph W(s, t), compute every vertex's
    selection state, and orient each edge toward the endpoint whose
    color the other selects (index order when both do).

    When every edge is covered the orientation's out-palettes sit inside
    the selections, so its directed local value under the natural
    coloring is at most tau + 1.  When coverage fails no orientation is
    returned and the failing edges are reported.
    """
    if s < 2:
        raise BadParameter("selection machinery needs s >= 2")
    if t < 2:
        raise BadParameter("need t >= 2")
    expected = t * (s ** (t - 1) - (s - 1) ** (t - 1))
    if max_vertices is not None and expected > max_vertices:
        raise TooLarge(f"W({s}, {t}) has {expected} vertices, cap is {max_vertices}")
    g, natural = wide_universal(s, t)
    states = tuple(swide_state(g.vertices[v], s) for v in range(g.n))
    tau = states[0].tau
    sel_fail = tuple(v for v in range(g.n) if len(states[v].selected) > tau)
    edge_fail = []
    for u, v in g.edge_list():
        if (
            states[u].color not in states[v].selected
            and states[v].color not in states[u].selected
        ):
            edge_fail.append((u, v))
    if edge_fail:
        report = PropertyReport(
            tau, not sel_fail, sel_fail, False, tuple(edge_fail), None
        )
        return SwideOrientationResult(g, natural, states, None, report)
    arcs = []
    for u, v in g.edge_list():
        u_covers = states[v].color in states[u].selected
        v_covers = states[u].color in states[v].selected
        if u_covers and not v_covers:
            arcs.append((u, v))
        elif v_covers and not u_covers:
            arcs.append((v, u))
        else:
            arcs.append((u, v))
    d = Digraph(g.vertices, arcs)
    value = directed_local_value(d, natural)
    report = PropertyReport(tau, not sel_fail, sel_fail, True, (), value)
    return SwideOrientationResult(g, natural, states, d, report)


def mycielski_orientation(d: Digraph) -> Digraph:
    """Lift an orientation to the 2-level Mycielskian of its underlying
    graph: level 0 copies the arcs, each mirror edge follows the arc of
    the level-0 edge it shadows, and every mirror vertex points at the
    apex.  Lifting iterates: each step can raise the attainable directed
    local value by one alongside the chromatic number."""
    if not d.is_orientation:
        raise NotOrientation("input must be an orientation")
    m = generalized_mycielski(d.underlying, 2)
    idx = m.index_of
    arcs = []
    for u, v in d.arcs:
        lu, lv = d.vertices[u], d.vertices[v]
        arcs.append((idx((0, lu)), idx((0, lv))))
        arcs.append((idx((1, lu)), idx((0, lv))))
        arcs.append((idx((0, lu)), idx((1, lv))))
    for lab in d.vertices:
        arcs.append((idx((1, lab)), idx(APEX)))
    out = Digraph(m.vertices, arcs)
    assert out.underlying.edges == m.edges
    return out


@dataclass
class DualityOutcome:
    """Either a directed local value <= 2 witness (coloring plus a
    homomorphism into the two-way shift digraph) or an obstruction (a
    homomorphism from an alternating odd cycle)."""

    value_le_2: bool
    coloring: Coloring | None
    universal: Digraph | None
    universal_hom: tuple[int, ...] | None
    obstruction_h: int | None
    obstruction: Digraph | None
    obstruction_hom: tuple[int, ...] | None


def decide_local2(d: Digraph) -> DualityOutcome:
    """Decide whether a digraph admits a proper coloring of directed
    local value at most 2, constructively in polynomial time.

    Vertices sharing an in-neighbor must share a color, so the
    equivalence closure of that relation is the only candidate class
    coloring.  If it is proper it wins, and mapping each vertex to
    (own class, out-class) lands in the two-way shift digraph on the
    classes.  Otherwise some edge joins two vertices chained together by
    shared in-neighbors, and the chain plus the edge maps an alternating
    odd cycle into the digraph, certifying value >= 3 (the value is
    homomorphism-monotone and alternating odd cycles have value 3).
    """
    n = d.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rel: dict[tuple[int, int], int] = {}
    for w in range(n):
        outs = d.out_neighbors[w]
        for i in range(len(outs)):
            for j in range(i + 1, len(outs)):
                key = (outs[i], outs[j])
                if key not in rel:
                    rel[key] = w
    for u, v in rel:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    colors = list(Coloring(find(v) for v in range(n)).canonical())

    bad = None
    for u, v in d.underlying.edge_list():
        if colors[u] == colors[v]:
            bad = (u, v)
            break

    if bad is None:
        classes = max(colors) + 1 if colors else 1
        m_eff = max(classes, 2)
        uni = sym_directed_shift(m_eff)
        hom = []
        for v in range(n):
            outs = d.out_neighbors[v]
            if outs:
                oc = colors[outs[0]]
                assert all(colors[u] == oc for u in outs)
            else:
                oc = 0 if colors[v] != 0 else 1
            hom.append(uni.index_of((colors[v] + 1, oc + 1)))
        for a, b in d.arcs:
            assert (hom[a], hom[b]) in uni.arcs
        return DualityOutcome(
            True, Coloring(colors), uni, tuple(hom), None, None, None
        )

    u, v = bad
    if (u, v) in d.arcs:
        tail, head = u, v
    else:
        tail, head = v, u
    # minimal chain head -> tail through the shared-in-neighbor relation
    radj: dict[int, list[tuple[int, int]]] = {x: [] for x in range(n)}
    for (x, y), w in sorted(rel.items()):
        radj[x].append((y, w))
        radj[y].append((x, w))
    for x in radj:
        radj[x].sort()
    prev: dict[int, tuple[int, int] | None] = {head: None}
    queue = deque([head])
    while tail not in prev:
        cur = queue.popleft()
        for nxt, w in radj[cur]:
            if nxt not in prev:
                prev[nxt] = (cur, w)
                queue.append(nxt)
    chain: list[int] = []
    witnesses: list[int] = []
    cur = tail
    while prev[cur] is not None:
        back, w = prev[cur]
        chain.append(cur)
        witnesses.append(w)
        cur = back
    chain.append(head)
    chain.reverse()
    witnesses.reverse()
    h = len(witnesses)
    images = [chain[0]]
    for k in range(h):
        images.extend((witnesses[k], chain[k + 1]))
    cyc = alternating_odd_cycle(h)
    hom_list = [images[-1]] + images[:-1]
    for a, b in cyc.arcs:
        assert (hom_list[a], hom_list[b]) in d.arcs
    return DualityOutcome(False, None, None, None, h, cyc, tuple(hom_list))
