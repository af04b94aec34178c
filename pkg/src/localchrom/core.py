"""Graph, digraph and coloring primitives shared by the whole toolkit.

Vertices are dense integer indices 0..n-1.  Each index carries an opaque
hashable label (integer pairs for shift graphs, frozensets for Kneser
graphs, level pairs for Mycielski constructions, value vectors for wide
universal graphs).  All cross-module references use indices; labels exist
so that witnesses stay human-readable.

Everything here is immutable after construction and every operation is a
pure function of its inputs, so results can be cached and compared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class ToolkitError(Exception):
    """Base class for all structured errors raised by the toolkit."""


class DuplicateLabel(ToolkitError):
    pass


class UnknownEndpoint(ToolkitError):
    pass


class SelfLoop(ToolkitError):
    pass


class BadParameter(ToolkitError):
    pass


class PartialColoring(ToolkitError):
    pass


class NotProper(ToolkitError):
    pass


class NotOrientation(ToolkitError):
    pass


class NotHomomorphism(ToolkitError):
    pass


class NotWide(ToolkitError):
    pass


class WrongColorCount(ToolkitError):
    pass


class WrongGraphShape(ToolkitError):
    pass


class ConditionViolated(ToolkitError):
    """A set-family condition failed; carries the first failing index pair."""

    def __init__(self, i: int, j: int, reason: str):
        self.i = i
        self.j = j
        self.reason = reason
        super().__init__(f"condition failed at ({i}, {j}): {reason}")


class TooLarge(ToolkitError):
    pass


class BudgetExceeded(ToolkitError):
    pass


class UnknownSuite(ToolkitError):
    pass


def _normalize_edges(n: int, edges: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    out = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise UnknownEndpoint(f"edge endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


class Graph:
    """Finite simple undirected graph with labeled vertices.

    Edges are stored as index pairs (u, v) with u < v; duplicates collapse,
    self-loops are rejected.
    """

    def __init__(self, labels: Sequence, edges: Iterable[tuple[int, int]] = ()):
        self.vertices: tuple = tuple(labels)
        self.n: int = len(self.vertices)
        if len(set(self.vertices)) != self.n:
            raise DuplicateLabel("vertex labels must be pairwise distinct")
        self.edges: frozenset[tuple[int, int]] = _normalize_edges(self.n, edges)

    @cached_property
    def _index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.vertices)}

    def index_of(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownEndpoint(f"unknown vertex label: {label!r}") from None

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            mat[u, v] = True
            mat[v, u] = True
        return mat

    def induced(self, indices: Sequence[int]) -> "Graph":
        """Induced subgraph on the given vertex indices (order preserved)."""
        idx = [int(i) for i in indices]
        if len(set(idx)) != len(idx):
            raise BadParameter("induced subgraph indices must be distinct")
        pos = {v: k for k, v in enumerate(idx)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph([self.vertices[i] for i in idx], edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


class Digraph:
    """Finite digraph without self-loops; arcs are ordered index pairs.

    A digraph is an *orientation* when it contains no symmetric arc pair;
    symmetric pairs are legal in general (they model two-way adjacency).
    """

    def __init__(self, labels: Sequence, arcs: Iterable[tuple[int, int]] = ()):
        self.vertices: tuple = tuple(labels)
        self.n: int = len(self.vertices)
        if len(set(self.vertices)) != self.n:
            raise DuplicateLabel("vertex labels must be pairwise distinct")
        out = set()
        for u, v in arcs:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise UnknownEndpoint(f"arc endpoint out of range: ({u}, {v}) with n={self.n}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            out.add((u, v))
        self.arcs: frozenset[tuple[int, int]] = frozenset(out)

    @cached_property
    def _index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.vertices)}

    def index_of(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownEndpoint(f"unknown vertex label: {label!r}") from None

    @cached_property
    def is_orientation(self) -> bool:
        return all((v, u) not in self.arcs for u, v in self.arcs)

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            nbrs[u].append(v)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def arc_list(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    @cached_property
    def underlying(self) -> Graph:
        return Graph(self.vertices, [(u, v) for u, v in self.arcs])

    def induced(self, indices: Sequence[int]) -> "Digraph":
        idx = [int(i) for i in indices]
        if len(set(idx)) != len(idx):
            raise BadParameter("induced subgraph indices must be distinct")
        pos = {v: k for k, v in enumerate(idx)}
        arcs = [(pos[u], pos[v]) for u, v in self.arcs if u in pos and v in pos]
        return Digraph([self.vertices[i] for i in idx], arcs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.vertices == other.vertices
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.vertices, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)}, orientation={self.is_orientation})"


class Coloring:
    """Total assignment of non-negative integer color ids to vertices.

    Color ids need not be contiguous or start at zero.
    """

    __slots__ = ("colors",)

    def __init__(self, colors: Iterable[int]):
        cols = tuple(int(c) for c in colors)
        if any(c < 0 for c in cols):
            raise BadParameter("color ids must be non-negative")
        self.colors = cols

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self):
        return iter(self.colors)

    def __eq__(self, other) -> bool:
        return isinstance(other, Coloring) and self.colors == other.colors

    def __hash__(self):
        return hash(self.colors)

    def __repr__(self) -> str:
        return f"Coloring({list(self.colors)})"

    def distinct(self) -> int:
        return len(set(self.colors))

    def canonical(self) -> "Coloring":
        """Renumber colors to 0,1,... in order of first occurrence."""
        seen: dict[int, int] = {}
        out = []
        for c in self.colors:
            if c not in seen:
                seen[c] = len(seen)
            out.append(seen[c])
        return Coloring(out)


def build_graph(labels: Sequence, label_edges: Iterable[tuple]) -> Graph:
    """Build a graph from labels and edges given as label pairs."""
    g = Graph(labels, ())
    edges = [(g.index_of(a), g.index_of(b)) for a, b in label_edges]
    return Graph(labels, edges)


def build_digraph(labels: Sequence, label_arcs: Iterable[tuple]) -> Digraph:
    """Build a digraph from labels and arcs given as label pairs."""
    d = Digraph(labels, ())
    arcs = [(d.index_of(a), d.index_of(b)) for a, b in label_arcs]
    return Digraph(labels, arcs)


def _check_total(g, coloring: Coloring) -> None:
    if len(coloring) != g.n:
        raise PartialColoring(
            f"coloring covers {len(coloring)} vertices, graph has {g.n}"
        )


def walk_reach(g: Graph, length: int) -> np.ndarray:
    """Boolean matrix whose (u, v) entry says a walk of exactly `length`
    edges joins u and v.  Walks may repeat vertices, and u = v counts
    (closed walks).  Computed as the boolean `length`-th power of the
    adjacency matrix.
    """
    if length < 1:
        raise BadParameter("walk length must be >= 1")
    # float32 matmul hits BLAS; exact here since 0/1 entries keep every
    # partial sum <= n < 2**24
    adjm = g.adjacency_matrix().astype(np.float32)
    acc = adjm.copy()
    for _ in range(length - 1):
        acc = ((acc @ adjm) > 0).astype(np.float32)
    return acc > 0


def is_proper(g: Graph, coloring: Coloring) -> tuple[bool, tuple[int, int] | None]:
    """Whether the coloring is proper; on failure also the first violating
    edge in sorted edge order."""
    _check_total(g, coloring)
    for u, v in g.edge_list():
        if coloring[u] == coloring[v]:
            return False, (u, v)
    return True, None


def local_value(g: Graph, coloring: Coloring) -> int:
    """Largest number of distinct colors in a closed neighborhood: the
    maximum over vertices of |colors on the neighborhood| + 1.

    Rejects improper colorings: the quantity is only meaningful when the
    vertex's own color never repeats on its neighborhood.
    """
    ok, bad = is_proper(g, coloring)
    if not ok:
        raise NotProper(f"coloring is not proper, edge {bad} is monochromatic")
    best = 0
    for v in range(g.n):
        seen = {coloring[u] for u in g.adj[v]}
        if len(seen) > best:
            best = len(seen)
    return best + 1


def directed_local_value(d: Digraph, coloring: Coloring) -> int:
    """Directed analogue of `local_value`: colors are only counted on
    out-neighborhoods.  A sink contributes 1."""
    ok, bad = is_proper(d.underlying, coloring)
    if not ok:
        raise NotProper(f"coloring is not proper, edge {bad} is monochromatic")
    best = 0
    for v in range(d.n):
        seen = {coloring[u] for u in d.out_neighbors[v]}
        if len(seen) > best:
            best = len(seen)
    return best + 1


@dataclass(frozen=True)
class RainbowBiclique:
    """A complete bipartite subgraph whose a + b vertices all carry
    pairwise distinct colors.  Sides are disjoint index tuples; every
    cross pair must be an edge (subgraph containment, not induced)."""

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def check(self, g: Graph, coloring: Coloring) -> bool:
        if set(self.side_a) & set(self.side_b):
            return False
        verts = self.side_a + self.side_b
        if len({coloring[v] for v in verts}) != len(verts):
            return False
        return all(g.has_edge(u, v) for u in self.side_a for v in self.side_b)


def find_rainbow_biclique(
    g: Graph, coloring: Coloring, a: int, b: int
) -> RainbowBiclique | None:
    """Exhaustive search for a rainbow complete bipartite subgraph with
    side sizes a and b.  Returns the first witness in lexicographic order
    of the a-side, or None when no such subgraph exists."""
    from itertools import combinations

    if a < 1 or b < 1:
        raise BadParameter("side sizes must be >= 1")
    ok, bad = is_proper(g, coloring)
    if not ok:
        raise NotProper(f"coloring is not proper, edge {bad} is monochromatic")
    masks = g.adj_masks
    for side_a in combinations(range(g.n), a):
        cols_a = {coloring[v] for v in side_a}
        if len(cols_a) != a:
            continue
        common = (1 << g.n) - 1
        for v in side_a:
            common &= masks[v]
        if common == 0:
            continue
        # one candidate vertex per eligible color keeps the witness canonical
        per_color: dict[int, int] = {}
        m = common
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            c = coloring[u]
            if c not in cols_a and c not in per_color:
                per_color[c] = u
        if len(per_color) >= b:
            side_b = tuple(sorted(per_color[c] for c in sorted(per_color)[:b]))
            return RainbowBiclique(tuple(side_a), side_b)
    return None
