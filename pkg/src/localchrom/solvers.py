"""Exact solvers for the chromatic quantities the toolkit studies.

All solvers are deterministic branch-and-bound searches over canonical
colorings (colors numbered in order of first use), so equal inputs give
identical values, witnesses and node counts.  Optional budgets cap the
search; a budget stop returns the incumbent bound flagged exact=False
instead of guessing.

Desk scale is the design point: tens of vertices for the coloring
solvers, at most 16 edges for the orientation sweep.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .core import (
    BadParameter,
    BudgetExceeded,
    Coloring,
    Digraph,
    Graph,
    NotProper,
    TooLarge,
    is_proper,
    local_value,
    walk_reach,
)


class _BudgetHit(Exception):
    pass


class _Ctx:
    """Node counter plus optional node/time limits shared across nested
    searches."""

    __slots__ = ("max_nodes", "deadline", "nodes")

    def __init__(self, budget_nodes: int | None, budget_ms: float | None):
        self.max_nodes = budget_nodes
        self.deadline = (
            time.perf_counter() + budget_ms / 1000.0 if budget_ms is not None else None
        )
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetHit
        if (
            self.deadline is not None
            and (self.nodes & 1023) == 0
            and time.perf_counter() > self.deadline
        ):
            raise _BudgetHit


@dataclass
class SolveReport:
    """Result of an exact solve.

    `witness` re-evaluates to `value` (an optimal coloring, a maximum
    independent set, or an orientation together with its optimal
    coloring).  `exact` is False when a budget stopped the search, in
    which case `value` is the best proven bound and the witness still
    attains it.
    """

    value: int
    witness: object
    nodes: int
    ms: float
    exact: bool = True


@dataclass
class OrientationWitness:
    digraph: Digraph
    coloring: Coloring


def _bfs_order(g: Graph) -> list[int]:
    """Vertices component by component, each component breadth-first from
    its highest-degree vertex.  Keeps colored regions connected so the
    local-value bounds tighten early."""
    seen = [False] * g.n
    order: list[int] = []
    while len(order) < g.n:
        seed = max(
            (v for v in range(g.n) if not seen[v]),
            key=lambda v: (len(g.adj[v]), -v),
        )
        seen[seed] = True
        queue = deque([seed])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


def _greedy_clique(g: Graph, within: int | None = None) -> list[int]:
    """Deterministic greedy clique, used as a lower bound."""
    masks = g.adj_masks
    scope = within if within is not None else (1 << g.n) - 1
    verts = [v for v in range(g.n) if (scope >> v) & 1]
    if not verts:
        return []
    verts.sort(key=lambda v: (-(masks[v] & scope).bit_count(), v))
    best: list[int] = []
    for seed in verts[:16]:
        clique = [seed]
        cand = masks[seed] & scope
        while cand:
            pick, pick_deg = -1, -1
            m = cand
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                d = (masks[u] & cand).bit_count()
                if d > pick_deg:
                    pick, pick_deg = u, d
            clique.append(pick)
            cand &= masks[pick]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colors = [-1] * n
    nmask = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (nmask[u].bit_count(), len(g.adj[u]), -u),
        )
        c = 0
        while (nmask[v] >> c) & 1:
            c += 1
        colors[v] = c
        bit = 1 << c
        for u in g.adj[v]:
            nmask[u] |= bit
    return colors


def _two_coloring(g: Graph) -> list[int] | None:
    colors = [-1] * g.n
    for s in range(g.n):
        if colors[s] >= 0:
            continue
        colors[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if colors[u] < 0:
                    colors[u] = 1 - colors[v]
                    queue.append(u)
                elif colors[u] == colors[v]:
                    return None
    return colors


def _k_coloring(g: Graph, k: int, ctx: _Ctx) -> list[int] | None:
    """Proper coloring with at most k colors, or None.  Exact."""
    n = g.n
    if k >= n:
        return list(range(n))
    if k <= 0:
        return None
    if k == 1:
        return [0] * n if not g.edges else None
    if k == 2:
        return _two_coloring(g)
    adj = g.adj
    # peel vertices of degree < k; they extend greedily afterwards
    deg = [len(adj[v]) for v in range(n)]
    alive = [True] * n
    stack = [v for v in range(n) if deg[v] < k]
    removed: list[int] = []
    while stack:
        v = stack.pop()
        if not alive[v] or deg[v] >= k:
            continue
        alive[v] = False
        removed.append(v)
        for u in adj[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] < k:
                    stack.append(u)
    core = [v for v in range(n) if alive[v]]
    colors = [-1] * n
    if core:
        core_mask = 0
        for v in core:
            core_mask |= 1 << v
        clique = _greedy_clique(g, within=core_mask)
        if len(clique) > k:
            return None
        for idx, v in enumerate(clique):
            colors[v] = idx
        if not _dsatur_decision(g, k, colors, core, len(clique), ctx):
            return None
    for v in reversed(removed):
        taken = {colors[u] for u in adj[v] if colors[u] >= 0}
        colors[v] = min(c for c in range(k) if c not in taken)
    return colors


def _dsatur_decision(
    g: Graph, k: int, colors: list[int], core: list[int], used0: int, ctx: _Ctx
) -> bool:
    adj = g.adj
    in_core = [False] * g.n
    for v in core:
        in_core[v] = True
    core_deg = {v: sum(1 for u in adj[v] if in_core[u]) for v in core}
    nmask = {v: 0 for v in core}
    for v in core:
        if colors[v] >= 0:
            bit = 1 << colors[v]
            for u in adj[v]:
                if in_core[u]:
                    nmask[u] |= bit
    todo = [v for v in core if colors[v] < 0]

    def rec(remaining: set[int], used: int) -> bool:
        ctx.tick()
        if not remaining:
            return True
        v = max(
            remaining,
            key=lambda u: (nmask[u].bit_count(), core_deg[u], -u),
        )
        cap = min(used + 1, k)
        forb = nmask[v]
        remaining.discard(v)
        for c in range(cap):
            if (forb >> c) & 1:
                continue
            bit = 1 << c
            colors[v] = c
            touched = []
            for u in adj[v]:
                if in_core[u] and colors[u] < 0 and not (nmask[u] & bit):
                    nmask[u] |= bit
                    touched.append(u)
            if rec(remaining, max(used, c + 1)):
                return True
            colors[v] = -1
            for u in touched:
                nmask[u] &= ~bit
        remaining.add(v)
        return False

    return rec(set(todo), used0)


def _chromatic_impl(g: Graph, ctx: _Ctx) -> tuple[int, list[int], bool]:
    greedy = _dsatur_greedy(g)
    ub = len(set(greedy))
    lb = max(1, len(_greedy_clique(g)))
    if g.edges:
        lb = max(lb, 2)
    value, witness, exact = ub, greedy, True
    try:
        for k in range(lb, ub):
            res = _k_coloring(g, k, ctx)
            if res is not None:
                value, witness = k, res
                break
    except _BudgetHit:
        exact = False
    return value, witness, exact


def chromatic_number(
    g: Graph, budget_nodes: int | None = None, budget_ms: float | None = None
) -> SolveReport:
    """Exact chromatic number with an optimal proper coloring as witness."""
    if g.n == 0:
        raise BadParameter("chromatic_number needs a non-empty graph")
    t0 = time.perf_counter()
    ctx = _Ctx(budget_nodes, budget_ms)
    value, witness, exact = _chromatic_impl(g, ctx)
    ms = (time.perf_counter() - t0) * 1000.0
    return SolveReport(value, Coloring(witness).canonical(), ctx.nodes, ms, exact)


def _max_clique_masks(masks: list[int], n: int, ctx: _Ctx) -> tuple[int, int, bool]:
    """Maximum clique over bitmask adjacency; greedy-coloring bound."""
    best_size = 0
    best_mask = 0
    exact = True

    def expand(r_size: int, r_mask: int, cand: int) -> None:
        nonlocal best_size, best_mask
        ctx.tick()
        if cand == 0:
            if r_size > best_size:
                best_size, best_mask = r_size, r_mask
            return
        # greedy coloring of the candidate set; class index bounds clique growth
        order: list[int] = []
        bound: list[int] = []
        tmp = cand
        color = 0
        while tmp:
            color += 1
            avail = tmp
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                avail &= ~masks[v]
                tmp &= ~(1 << v)
                order.append(v)
                bound.append(color)
        for idx in range(len(order) - 1, -1, -1):
            if r_size + bound[idx] <= best_size:
                return
            v = order[idx]
            expand(r_size + 1, r_mask | (1 << v), cand & masks[v])
            cand &= ~(1 << v)

    try:
        expand(0, 0, (1 << n) - 1)
    except _BudgetHit:
        exact = False
    return best_size, best_mask, exact


def independence_number(
    g: Graph, budget_nodes: int | None = None, budget_ms: float | None = None
) -> SolveReport:
    """Exact independence number; witness is a maximum independent set
    given as a sorted tuple of vertex indices."""
    if g.n == 0:
        raise BadParameter("independence_number needs a non-empty graph")
    t0 = time.perf_counter()
    ctx = _Ctx(budget_nodes, budget_ms)
    full = (1 << g.n) - 1
    comp = [full & ~g.adj_masks[v] & ~(1 << v) for v in range(g.n)]
    size, mask, exact = _max_clique_masks(comp, g.n, ctx)
    witness = tuple(v for v in range(g.n) if (mask >> v) & 1)
    ms = (time.perf_counter() - t0) * 1000.0
    return SolveReport(size, witness, ctx.nodes, ms, exact)


def _local_impl(g: Graph, ctx: _Ctx) -> tuple[int, list[int], bool]:
    n = g.n
    if not g.edges:
        return 1, [0] * n, True
    chi_val, chi_cols, chi_exact = _chromatic_impl(g, ctx)
    best_val = local_value(g, Coloring(chi_cols))
    best_cols = list(chi_cols)
    lb = max(2, len(_greedy_clique(g)))
    exact = chi_exact
    if best_val <= lb and chi_exact:
        return best_val, best_cols, True

    adj = g.adj
    order = _bfs_order(g)
    colors = [-1] * n
    nmask = [0] * n
    ncnt = [0] * n
    found_lb = False

    def rec(i: int, used: int, cur_max: int) -> None:
        nonlocal best_val, best_cols, found_lb
        if found_lb:
            return
        ctx.tick()
        if cur_max + 1 >= best_val:
            return
        if i == n:
            best_val = cur_max + 1
            best_cols = colors[:]
            if best_val <= lb:
                found_lb = True
            return
        v = order[i]
        forb = nmask[v]
        for c in range(min(used + 1, n)):
            if (forb >> c) & 1:
                continue
            bit = 1 << c
            new_max = cur_max
            touched = []
            for u in adj[v]:
                if not (nmask[u] & bit):
                    nmask[u] |= bit
                    ncnt[u] += 1
                    touched.append(u)
                    if ncnt[u] > new_max:
                        new_max = ncnt[u]
            if new_max + 1 < best_val:
                colors[v] = c
                rec(i + 1, used + (1 if c == used else 0), new_max)
                colors[v] = -1
            for u in touched:
                nmask[u] &= ~bit
                ncnt[u] -= 1
            if found_lb:
                return

    try:
        rec(0, 0, 0)
    except _BudgetHit:
        exact = False
    return best_val, best_cols, exact


def local_chromatic(
    g: Graph, budget_nodes: int | None = None, budget_ms: float | None = None
) -> SolveReport:
    """Exact local chromatic number: the minimum over proper colorings
    (any number of colors) of the largest closed-neighborhood color
    count."""
    if g.n == 0:
        raise BadParameter("local_chromatic needs a non-empty graph")
    t0 = time.perf_counter()
    ctx = _Ctx(budget_nodes, budget_ms)
    value, cols, exact = _local_impl(g, ctx)
    ms = (time.perf_counter() - t0) * 1000.0
    return SolveReport(value, Coloring(cols).canonical(), ctx.nodes, ms, exact)


def _directed_value(d: Digraph, colors: list[int]) -> int:
    best = 0
    for v in range(d.n):
        seen = {colors[u] for u in d.out_neighbors[v]}
        if len(seen) > best:
            best = len(seen)
    return best + 1


def _dlocal_impl(d: Digraph, ctx: _Ctx) -> tuple[int, list[int], bool]:
    n = d.n
    if not d.arcs:
        return 1, [0] * n, True
    und = d.underlying
    chi_val, chi_cols, chi_exact = _chromatic_impl(und, ctx)
    best_val = _directed_value(d, chi_cols)
    best_cols = list(chi_cols)
    lb = 2
    for v in range(n):
        out_mask = 0
        for u in d.out_neighbors[v]:
            out_mask |= 1 << u
        if out_mask:
            q = len(_greedy_clique(und, within=out_mask))
            if q + 1 > lb:
                lb = q + 1
    exact = chi_exact
    if best_val <= lb and chi_exact:
        return best_val, best_cols, True

    adj = und.adj
    into = d.in_neighbors
    order = _bfs_order(und)
    colors = [-1] * n
    umask = [0] * n
    omask = [0] * n
    ocnt = [0] * n
    found_lb = False

    def rec(i: int, used: int, cur_max: int) -> None:
        nonlocal best_val, best_cols, found_lb
        if found_lb:
            return
        ctx.tick()
        if cur_max + 1 >= best_val:
            return
        if i == n:
            best_val = cur_max + 1
            best_cols = colors[:]
            if best_val <= lb:
                found_lb = True
            return
        v = order[i]
        forb = umask[v]
        for c in range(min(used + 1, n)):
            if (forb >> c) & 1:
                continue
            bit = 1 << c
            new_max = cur_max
            touched_u = []
            touched_o = []
            for u in adj[v]:
                if not (umask[u] & bit):
                    umask[u] |= bit
                    touched_u.append(u)
            for u in into[v]:
                if not (omask[u] & bit):
                    omask[u] |= bit
                    ocnt[u] += 1
                    touched_o.append(u)
                    if ocnt[u] > new_max:
                        new_max = ocnt[u]
            if new_max + 1 < best_val:
                colors[v] = c
                rec(i + 1, used + (1 if c == used else 0), new_max)
                colors[v] = -1
            for u in touched_u:
                umask[u] &= ~bit
            for u in touched_o:
                omask[u] &= ~bit
                ocnt[u] -= 1
            if found_lb:
                return

    try:
        rec(0, 0, 0)
    except _BudgetHit:
        exact = False
    return best_val, best_cols, exact


def directed_local_chromatic(
    d: Digraph, budget_nodes: int | None = None, budget_ms: float | None = None
) -> SolveReport:
    """Exact directed local chromatic number: minimize over proper
    colorings of the underlying graph the largest out-neighborhood color
    count plus one."""
    if d.n == 0:
        raise BadParameter("directed_local_chromatic needs a non-empty digraph")
    t0 = time.perf_counter()
    ctx = _Ctx(budget_nodes, budget_ms)
    value, cols, exact = _dlocal_impl(d, ctx)
    ms = (time.perf_counter() - t0) * 1000.0
    return SolveReport(value, Coloring(cols).canonical(), ctx.nodes, ms, exact)


def _orientations(g: Graph):
    edges = g.edge_list()
    m = len(edges)
    for mask in range(1 << m):
        arcs = [
            (v, u) if (mask >> i) & 1 else (u, v) for i, (u, v) in enumerate(edges)
        ]
        yield Digraph(g.vertices, arcs)


def min_directed_local_chromatic(
    g: Graph,
    max_edges: int = 16,
    budget_nodes: int | None = None,
    budget_ms: float | None = None,
) -> SolveReport:
    """Minimum of the directed local chromatic number over all 2^|E|
    orientations of g.  Witness: a minimizing orientation with its
    optimal coloring.  Guarded by max_edges; no symmetry shortcuts, the
    quantity is not invariant under whole-graph arc reversal."""
    return _orientation_sweep(g, False, max_edges, budget_nodes, budget_ms)


def max_directed_local_chromatic(
    g: Graph,
    max_edges: int = 16,
    budget_nodes: int | None = None,
    budget_ms: float | None = None,
) -> SolveReport:
    """Maximum counterpart of `min_directed_local_chromatic`."""
    return _orientation_sweep(g, True, max_edges, budget_nodes, budget_ms)


def _orientation_sweep(
    g: Graph,
    maximize: bool,
    max_edges: int,
    budget_nodes: int | None,
    budget_ms: float | None,
) -> SolveReport:
    if g.n == 0:
        raise BadParameter("orientation sweep needs a non-empty graph")
    m = len(g.edges)
    if m > max_edges:
        raise TooLarge(f"{m} edges exceeds the orientation sweep cap {max_edges}")
    t0 = time.perf_counter()
    ctx = _Ctx(budget_nodes, budget_ms)
    best: tuple[int, Digraph, list[int]] | None = None
    exact = True
    try:
        for dg in _orientations(g):
            value, cols, ex = _dlocal_impl(dg, ctx)
            if not ex:
                exact = False
            if (
                best is None
                or (maximize and value > best[0])
                or (not maximize and value < best[0])
            ):
                best = (value, dg, cols)
            if not maximize and best[0] <= (2 if g.edges else 1):
                break
    except _BudgetHit:
        exact = False
    if best is None:
        raise BudgetExceeded("budget exhausted before any orientation was solved")
    value, dg, cols = best
    ms = (time.perf_counter() - t0) * 1000.0
    witness = OrientationWitness(dg, Coloring(cols).canonical())
    return SolveReport(value, witness, ctx.nodes, ms, exact)


def is_s_wide(
    g: Graph, coloring: Coloring, s: int
) -> tuple[bool, tuple[int, int] | None]:
    """Whether the proper coloring has no walk of exactly 2s-1 edges
    between same-colored vertices (closed walks included, so u = v
    counts).  1-wide coincides with proper.  On failure returns the
    first violating pair in index order."""
    if s < 1:
        raise BadParameter("wideness parameter must be >= 1")
    ok, bad = is_proper(g, coloring)
    if not ok:
        # a monochromatic edge walks u-v-u-...-v of any odd length
        return False, bad
    reach = walk_reach(g, 2 * s - 1)
    for u in range(g.n):
        for v in range(u, g.n):
            if coloring[u] == coloring[v] and reach[u, v]:
                return False, (u, v)
    return True, None


def find_homomorphism(
    g,
    h,
    directed: bool = False,
    budget_nodes: int | None = None,
    budget_ms: float | None = None,
) -> tuple[int, ...] | None:
    """Backtracking search for a homomorphism g -> h (edge-preserving
    vertex map; arc-preserving when directed=True).  Exhaustive: None
    means no homomorphism exists.  Raises BudgetExceeded if a budget
    stops the search before either answer is proven."""
    if directed:
        if not isinstance(g, Digraph) or not isinstance(h, Digraph):
            raise BadParameter("directed search needs two digraphs")
        und = g.underlying
        hn = h.n
        out_m = [0] * hn
        in_m = [0] * hn
        for a, b in h.arcs:
            out_m[a] |= 1 << b
            in_m[b] |= 1 << a
    else:
        if not isinstance(g, Graph) or not isinstance(h, Graph):
            raise BadParameter("undirected search needs two graphs")
        und = g
        hn = h.n
        adj_m = list(h.adj_masks)
    if g.n == 0:
        return ()
    if hn == 0:
        return None

    ctx = _Ctx(budget_nodes, budget_ms)
    order = _bfs_order(und)
    pos = {v: i for i, v in enumerate(order)}
    full = (1 << hn) - 1
    domains = [full] * g.n
    assign = [-1] * g.n

    if directed:
        constraints: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
        # (neighbor, mode): mode 0 -> image in out(f(v)), 1 -> image in in(f(v))
        for a, b in g.arcs:
            constraints[a].append((b, 0))
            constraints[b].append((a, 1))
        for v in range(g.n):
            constraints[v].sort()
    else:
        constraints = [[(u, 0) for u in und.adj[v]] for v in range(g.n)]

    def allowed(hv: int, mode: int) -> int:
        if not directed:
            return adj_m[hv]
        return out_m[hv] if mode == 0 else in_m[hv]

    def rec(i: int) -> bool:
        ctx.tick()
        if i == g.n:
            return True
        v = order[i]
        dom = domains[v]
        while dom:
            hv = (dom & -dom).bit_length() - 1
            dom &= dom - 1
            assign[v] = hv
            saved = []
            dead = False
            for u, mode in constraints[v]:
                if assign[u] >= 0:
                    continue
                new = domains[u] & allowed(hv, mode)
                if new != domains[u]:
                    saved.append((u, domains[u]))
                    domains[u] = new
                    if new == 0 and pos[u] > i:
                        dead = True
            if not dead and rec(i + 1):
                return True
            assign[v] = -1
            for u, old in saved:
                domains[u] = old
        return False

    try:
        found = rec(0)
    except _BudgetHit:
        raise BudgetExceeded("homomorphism search stopped by budget") from None
    if not found:
        return None
    # final consistency check, cheap insurance on the constraint wiring
    if directed:
        for a, b in g.arcs:
            if (assign[b] < 0) or not ((out_m[assign[a]] >> assign[b]) & 1):
                raise NotProper("internal error: arc not preserved")
    else:
        for a, b in g.edges:
            if not ((adj_m[assign[a]] >> assign[b]) & 1):
                raise NotProper("internal error: edge not preserved")
    return tuple(assign)


def _rainbow_with(
    g: Graph, colors: list[int], v: int, a: int, b: int
) -> bool:
    """Does the partially colored graph contain a rainbow complete
    bipartite subgraph with side sizes (a, b) using vertex v?"""
    masks = g.adj_masks
    colored = [u for u in range(g.n) if colors[u] >= 0]
    colored_mask = 0
    for u in colored:
        colored_mask |= 1 << u
    sides = {(a, b), (b, a)}
    for sa, sb in sorted(sides):
        pool = [u for u in colored if u != v and colors[u] != colors[v]]
        for rest in combinations(pool, sa - 1):
            side = (v,) + rest
            if len({colors[u] for u in side}) != sa:
                continue
            common = colored_mask
            for u in side:
                common &= masks[u]
            if common == 0:
                continue
            side_cols = {colors[u] for u in side}
            elig = set()
            m = common
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if colors[u] not in side_cols:
                    elig.add(colors[u])
                    if len(elig) >= sb:
                        return True
    return False


def find_coloring_without_rainbow(
    g: Graph,
    a: int,
    b: int,
    budget_nodes: int | None = None,
    budget_ms: float | None = None,
) -> Coloring | None:
    """Exhaustive search for a proper coloring (any number of colors)
    containing no rainbow complete bipartite subgraph with side sizes
    (a, b).  None is a proof that every proper coloring contains one.
    Raises BudgetExceeded when interrupted."""
    n = g.n
    if n == 0:
        raise BadParameter("needs a non-empty graph")
    ctx = _Ctx(budget_nodes, budget_ms)
    order = _bfs_order(g)
    adj = g.adj
    colors = [-1] * n

    def rec(i: int, used: int) -> bool:
        ctx.tick()
        if i == n:
            return True
        v = order[i]
        taken = {colors[u] for u in adj[v] if colors[u] >= 0}
        for c in range(used + 1):
            if c in taken:
                continue
            colors[v] = c
            if not _rainbow_with(g, colors, v, a, b) and rec(
                i + 1, used + (1 if c == used else 0)
            ):
                return True
            colors[v] = -1
        return False

    try:
        found = rec(0, 0)
    except _BudgetHit:
        raise BudgetExceeded("rainbow-avoidance search stopped by budget") from None
    return Coloring(colors).canonical() if found else None
