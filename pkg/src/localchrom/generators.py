"""Deterministic constructions of the graph families under study.

Every generator fixes a lexicographic vertex order, so repeated calls
with equal parameters return identical objects and all solver witnesses
are reproducible.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .core import BadParameter, Coloring, Digraph, Graph


def shift_graph(m: int) -> Graph:
    """Graph on increasing pairs (i, j), 1 <= i < j <= m; pairs (i, j) and
    (k, l) are adjacent when j = k or l = i, i.e. exactly the pairs
    (i, j), (j, k) of each triple i < j < k."""
    if m < 2:
        raise BadParameter("shift_graph needs m >= 2")
    labels = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    pos = {lab: k for k, lab in enumerate(labels)}
    edges = []
    for i, j, k in combinations(range(1, m + 1), 3):
        edges.append((pos[(i, j)], pos[(j, k)]))
    return Graph(labels, edges)


def symmetric_shift_graph(m: int) -> Graph:
    """Graph on all ordered pairs (i, j), i != j, from 1..m; (i, j) and
    (k, l) are adjacent when j = k or l = i.  Reversal pairs (i, j),
    (j, i) are always adjacent."""
    if m < 2:
        raise BadParameter("symmetric_shift_graph needs m >= 2")
    labels = [(i, j) for i in range(1, m + 1) for j in range(1, m + 1) if i != j]
    pos = {lab: k for k, lab in enumerate(labels)}
    edges = set()
    for (i, j), (k, l) in combinations(labels, 2):
        if j == k or l == i:
            edges.add((pos[(i, j)], pos[(k, l)]))
    return Graph(labels, sorted(edges))


def sym_directed_shift(m: int) -> Digraph:
    """Digraph on ordered pairs (i, j), i != j, with an arc from (x, y) to
    every (y, z), z != y.  Reversal pairs carry both arcs, so this is not
    an orientation; its underlying graph is symmetric_shift_graph(m)."""
    if m < 2:
        raise BadParameter("sym_directed_shift needs m >= 2")
    labels = [(i, j) for i in range(1, m + 1) for j in range(1, m + 1) if i != j]
    pos = {lab: k for k, lab in enumerate(labels)}
    arcs = []
    for x, y in labels:
        for z in range(1, m + 1):
            if z != y:
                arcs.append((pos[(x, y)], pos[(y, z)]))
    return Digraph(labels, arcs)


def kneser(n: int, k: int) -> Graph:
    """Kneser graph: k-subsets of 1..n, adjacent when disjoint."""
    if k < 1 or n < 2 * k:
        raise BadParameter("kneser needs 1 <= k and n >= 2k")
    labels = [frozenset(c) for c in combinations(range(1, n + 1), k)]
    edges = [
        (a, b)
        for a, b in combinations(range(len(labels)), 2)
        if not (labels[a] & labels[b])
    ]
    return Graph(labels, edges)


def _cyclically_stable(subset: tuple[int, ...], n: int) -> bool:
    s = set(subset)
    if any(i in s and i + 1 in s for i in range(1, n)):
        return False
    return not (1 in s and n in s)


def schrijver(n: int, k: int) -> Graph:
    """Schrijver graph: the Kneser graph restricted to k-subsets that are
    independent on the cycle 1..n (no two cyclically consecutive
    elements)."""
    if k < 1 or n < 2 * k:
        raise BadParameter("schrijver needs 1 <= k and n >= 2k")
    labels = [
        frozenset(c)
        for c in combinations(range(1, n + 1), k)
        if _cyclically_stable(c, n)
    ]
    edges = [
        (a, b)
        for a, b in combinations(range(len(labels)), 2)
        if not (labels[a] & labels[b])
    ]
    return Graph(labels, edges)


APEX = "z"


def generalized_mycielski(g: Graph, r: int) -> Graph:
    """Mycielski-type extension with r levels plus an apex.

    Level 0 is a copy of g; an edge of g also joins consecutive levels
    (in both crossing directions); every top-level vertex is joined to
    the apex.  Levels above 0 are independent sets.  r = 2 is the classic
    construction that raises the chromatic number by one.
    """
    if r < 1:
        raise BadParameter("generalized_mycielski needs r >= 1")
    labels: list = [(lvl, lab) for lvl in range(r) for lab in g.vertices]
    labels.append(APEX)
    apex = len(labels) - 1

    def at(lvl: int, v: int) -> int:
        return lvl * g.n + v

    edges = []
    for u, v in g.edge_list():
        edges.append((at(0, u), at(0, v)))
        for lvl in range(r - 1):
            edges.append((at(lvl, u), at(lvl + 1, v)))
            edges.append((at(lvl, v), at(lvl + 1, u)))
    for v in range(g.n):
        edges.append((at(r - 1, v), apex))
    return Graph(labels, edges)


def wide_universal(s: int, t: int) -> tuple[Graph, Coloring]:
    """Universal graph for wide colorings, with its natural coloring.

    Vertices are vectors f over positions 1..t with values 0..s, exactly
    one zero entry and at least one entry equal to 1.  Vectors f, g are
    adjacent when every coordinate satisfies |f(i) - g(i)| = 1 or
    f(i) = g(i) = s.  The natural coloring assigns f the position of its
    zero entry (color ids 1..t).
    """
    if s < 1 or t < 2:
        raise BadParameter("wide_universal needs s >= 1 and t >= 2")
    labels = [
        vec
        for vec in product(range(s + 1), repeat=t)
        if vec.count(0) == 1 and 1 in vec
    ]
    arr = np.array(labels, dtype=np.int16)
    diff = np.abs(arr[:, None, :] - arr[None, :, :])
    okc = (diff == 1) | ((arr[:, None, :] == s) & (arr[None, :, :] == s))
    adjm = okc.all(axis=2)
    iu, ju = np.nonzero(np.triu(adjm, k=1))
    edges = list(zip(iu.tolist(), ju.tolist()))
    colors = [vec.index(0) + 1 for vec in labels]
    return Graph(labels, edges), Coloring(colors)


def alternating_odd_cycle(h: int) -> Digraph:
    """Orientation of the cycle on 2h+1 vertices with exactly one vertex
    of out-degree 1; the other out-degrees alternate between 2 and 0.
    Vertex 0 is the out-degree-1 vertex, even positions are sources."""
    if h < 1:
        raise BadParameter("alternating_odd_cycle needs h >= 1")
    n = 2 * h + 1
    labels = list(range(n))
    arcs = [(0, 1)]
    for k in range(1, h + 1):
        v = 2 * k
        arcs.append((v, v - 1))
        arcs.append((v, (v + 1) % n))
    return Digraph(labels, arcs)


def balanced_complete_orientation(r: int) -> Digraph:
    """Orientation of the complete graph on 0..r-1 with every out-degree
    at most floor(r/2): the circulant sending i to i+1, ..., i+floor((r-1)/2)
    mod r, plus, for even r, the arcs i -> i + r/2 for i < r/2."""
    if r < 1:
        raise BadParameter("balanced_complete_orientation needs r >= 1")
    labels = list(range(r))
    arcs = []
    for i in range(r):
        for j in range(1, (r - 1) // 2 + 1):
            arcs.append((i, (i + j) % r))
    if r % 2 == 0:
        half = r // 2
        for i in range(half):
            arcs.append((i, i + half))
    return Digraph(labels, arcs)


def complete_graph(r: int) -> Graph:
    if r < 1:
        raise BadParameter("complete_graph needs r >= 1")
    return Graph(list(range(r)), combinations(range(r), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameter("cycle_graph needs n >= 3")
    return Graph(list(range(n)), [(i, (i + 1) % n) for i in range(n)])
