"""Grids, toroidal grids, and readability of grid graphs.

Cell ``(r, c)`` is an ``S`` vertex when ``r + c`` is even and a ``P``
vertex otherwise.  Within each side, cells are indexed in lexicographic
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graph_core import BipartiteGraph, enumerate_patterns, is_edgeless, is_p4_free, PatternKind
from .labeling import Labeling, biclique_labeling, empty_labeling, restrict, reverse, verify
from .readability2 import decide_le2

Cell = tuple[int, int]


@dataclass(frozen=True)
class GridGraphSpec:
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", frozenset((int(r), int(c)) for r, c in self.cells))
        if any(r < 0 or c < 0 for r, c in self.cells):
            raise ValueError("cell coordinates must be non-negative")

    @classmethod
    def full(cls, m: int, n: int) -> "GridGraphSpec":
        return cls(frozenset(grid_cells(m, n)))


class GridEmbedding(NamedTuple):
    """A graph together with the cell behind each vertex index."""

    graph: BipartiteGraph
    s_cells: tuple[Cell, ...]
    p_cells: tuple[Cell, ...]


def grid_cells(m: int, n: int) -> list[Cell]:
    return [(i, j) for i in range(m) for j in range(n)]


def _split(cells: Iterable[Cell]) -> tuple[tuple[Cell, ...], tuple[Cell, ...]]:
    cells = sorted(set(cells))
    return tuple(c for c in cells if sum(c) % 2 == 0), tuple(c for c in cells if sum(c) % 2 == 1)


def grid_graph(cells: Iterable[Cell]) -> GridEmbedding:
    """Induced subgraph of the infinite grid on ``cells`` (L1-distance-1 adjacency)."""
    s_cells, p_cells = _split(cells)
    p_index = {c: k for k, c in enumerate(p_cells)}
    edges = []
    for i, (r, c) in enumerate(s_cells):
        for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if nb in p_index:
                edges.append((i, p_index[nb]))
    return GridEmbedding(BipartiteGraph(len(s_cells), len(p_cells), edges), s_cells, p_cells)


def grid(m: int, n: int) -> BipartiteGraph:
    """The ``m x n`` grid ``G_{m,n}``."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    return grid_graph(grid_cells(m, n)).graph


def torus_embedding(m: int, n: int) -> GridEmbedding:
    if m < 3 or n < 3:
        raise ValueError("toroidal grid needs m, n >= 3")
    if m % 2 or n % 2:
        raise ValueError(f"toroidal grid {m}x{n} is not bipartite (both sides must be even)")
    s_cells, p_cells = _split(grid_cells(m, n))
    p_index = {c: k for k, c in enumerate(p_cells)}
    edges = []
    for i, (r, c) in enumerate(s_cells):
        for nb in (((r - 1) % m, c), ((r + 1) % m, c), (r, (c - 1) % n), (r, (c + 1) % n)):
            edges.append((i, p_index[nb]))
    return GridEmbedding(BipartiteGraph(len(s_cells), len(p_cells), edges), s_cells, p_cells)


def toroidal_grid(m: int, n: int) -> BipartiteGraph:
    """``TG_{m,n}``; only even ``m, n >= 4`` give a bipartite graph."""
    return torus_embedding(m, n).graph


# ---------------------------------------------------------------------------
# the length-3 labeling of TG_{4n,4n}


@dataclass(frozen=True)
class SquarePartition:
    """The squares of ``G_0`` in ``TG_{4n,4n}``.

    ``anchors`` are the lower-left corners ``u`` with ``u1 = 0 (mod 4)`` and
    ``u2`` even, or ``u1 = 2 (mod 4)`` and ``u2`` odd; ids follow the
    lexicographic order of the anchors.
    """

    n: int
    anchors: tuple[Cell, ...]
    square_of: dict

    @property
    def size(self) -> int:
        return 4 * self.n

    def members(self, anchor: Cell) -> list[Cell]:
        r, c = anchor
        N = self.size
        return [(r, c), (r, (c + 1) % N), ((r + 1) % N, c), ((r + 1) % N, (c + 1) % N)]


def square_partition(n: int) -> SquarePartition:
    if n < 1:
        raise ValueError("n must be positive")
    N = 4 * n
    anchors = tuple(
        (r, c) for r in range(N) for c in range(N) if (r % 4 == 0 and c % 2 == 0) or (r % 4 == 2 and c % 2 == 1)
    )
    part = SquarePartition(n, anchors, {})
    square_of = {}
    for sid, a in enumerate(anchors):
        for cell in part.members(a):
            if cell in square_of:
                raise AssertionError(f"cell {cell} lies in two squares")
            square_of[cell] = sid
    object.__setattr__(part, "square_of", square_of)
    return part


@dataclass(frozen=True)
class TorusStructure:
    """``G_0`` edges and the two matchings ``M1`` (horizontal) and ``M2`` (vertical).

    Edges are stored as unordered cell pairs; ``m1`` and ``m2`` map each
    cell to its partner.  Horizontal edges join cells differing in their
    first coordinate.
    """

    partition: SquarePartition
    square_edges: frozenset[frozenset[Cell]]
    m1_edges: frozenset[frozenset[Cell]]
    m2_edges: frozenset[frozenset[Cell]]
    m1: dict
    m2: dict


def torus_structure(n: int) -> TorusStructure:
    part = square_partition(n)
    N = part.size
    sq, m1e, m2e = set(), set(), set()
    for r in range(N):
        for c in range(N):
            u = (r, c)
            for v, horizontal in ((((r + 1) % N, c), True), ((r, (c + 1) % N), False)):
                e = frozenset((u, v))
                if part.square_of[u] == part.square_of[v]:
                    sq.add(e)
                elif horizontal:
                    m1e.add(e)
                else:
                    m2e.add(e)
    m1, m2 = {}, {}
    for edges, partner in ((m1e, m1), (m2e, m2)):
        for e in edges:
            a, b = tuple(e)
            if a in partner or b in partner:
                raise AssertionError("M1/M2 is not a matching")
            partner[a] = b
            partner[b] = a
    return TorusStructure(part, frozenset(sq), frozenset(m1e), frozenset(m2e), m1, m2)


def edges_partitioned(st: TorusStructure) -> bool:
    """Square edges, ``M1`` and ``M2`` partition the torus edges; both matchings are perfect."""
    N = st.partition.size
    every = set()
    for r in range(N):
        for c in range(N):
            every.add(frozenset(((r, c), ((r + 1) % N, c))))
            every.add(frozenset(((r, c), (r, (c + 1) % N))))
    parts = (st.square_edges, st.m1_edges, st.m2_edges)
    disjoint = sum(len(x) for x in parts) == len(set().union(*parts))
    cells = N * N
    return disjoint and set().union(*parts) == every and len(st.m1) == cells and len(st.m2) == cells


def m2_ends_share_m1_square(st: TorusStructure) -> bool:
    """For every ``(u, v)`` in ``M2``, ``M1(u)`` and ``M1(v)`` lie in one square."""
    q = st.partition.square_of
    return all(q[st.m1[u]] == q[st.m1[v]] for u, v in map(tuple, st.m2_edges))


def m1_square_pairs_unique(st: TorusStructure) -> bool:
    """No two ``M1`` edges ``(u, v)`` with ``u`` in ``S`` share the id pair ``(q(u), q(v))``.

    The pair is ordered: on ``TG_{4,4}`` two ``M1`` edges join the same two
    squares, in opposite directions.
    """
    q = st.partition.square_of
    seen = set()
    for u, v in map(tuple, st.m1_edges):
        if sum(u) % 2:
            u, v = v, u
        key = (q[u], q[v])
        if key[0] == key[1] or key in seen:
            return False
        seen.add(key)
    return True


def torus_labeling(n: int) -> Labeling:
    """A length-3 overlap labeling of ``TG_{4n,4n}`` over ``4n^2`` symbols.

    With ``q(u)`` the square id of ``u``, an ``S`` vertex gets
    ``q(M2(u)) q(M1(u)) q(u)`` and a ``P`` vertex the reverse,
    ``q(u) q(M1(u)) q(M2(u))``.
    """
    st = torus_structure(n)
    q = st.partition.square_of
    emb = torus_embedding(4 * n, 4 * n)
    s_labels = tuple((q[st.m2[u]], q[st.m1[u]], q[u]) for u in emb.s_cells)
    p_labels = tuple((q[u], q[st.m1[u]], q[st.m2[u]]) for u in emb.p_cells)
    return Labeling(s_labels, p_labels)


# ---------------------------------------------------------------------------
# readability values


def grid_readability(m: int, n: int) -> int:
    """Closed-form readability of the grid ``G_{m,n}``."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    m, n = sorted((m, n))
    if m >= 3:
        return 3
    if (m == 2 and n >= 3) or (m == 1 and n >= 4):
        return 2
    if (m, n) == (1, 1):
        return 0
    return 1


class GridReadability(NamedTuple):
    value: int
    witness: Labeling


def torus_witness(cells: Iterable[Cell]) -> Labeling:
    """Length-3 labeling of a grid graph, restricted from a large enough torus.

    Cells are translated so the smallest row and column become 0; the torus
    side ``4n' >= extent + 2`` keeps wrap-around edges away from occupied
    cells.  When the translation has odd parity the two sides trade places,
    so the torus labeling is reversed first.
    """
    emb = grid_graph(cells)
    allc = emb.s_cells + emb.p_cells
    if not allc:
        return Labeling((), ())
    r0 = min(r for r, _ in allc)
    c0 = min(c for _, c in allc)
    extent = max(max(r - r0, c - c0) for r, c in allc)
    n_t = max(1, -(-(extent + 2) // 4))
    torus = torus_embedding(4 * n_t, 4 * n_t)
    lab = torus_labeling(n_t)
    ts = {c: k for k, c in enumerate(torus.s_cells)}
    tp = {c: k for k, c in enumerate(torus.p_cells)}

    def moved(cell: Cell) -> Cell:
        return (cell[0] - r0, cell[1] - c0)

    if (r0 + c0) % 2 == 0:
        return restrict(lab, [ts[moved(c)] for c in emb.s_cells], [tp[moved(c)] for c in emb.p_cells])
    return restrict(reverse(lab), [tp[moved(c)] for c in emb.s_cells], [ts[moved(c)] for c in emb.p_cells])


def grid_graph_readability(spec: GridGraphSpec | Iterable[Cell]) -> GridReadability:
    """Exact readability of a grid graph with a verified witness of that length.

    0 when edgeless, 1 when P4-free, 2 when the readability-2 decider says
    yes, and 3 otherwise (every grid graph embeds in some ``TG_{4n,4n}``).
    """
    cells = spec.cells if isinstance(spec, GridGraphSpec) else frozenset(spec)
    if not cells:
        raise ValueError("grid graph needs at least one cell")
    g = grid_graph(cells).graph
    if is_edgeless(g):
        value, lab = 0, empty_labeling(g)
    elif is_p4_free(g):
        value, lab = 1, biclique_labeling(g)
    else:
        d = decide_le2(g)
        if d.answer:
            value, lab = 2, d.labeling
        else:
            value, lab = 3, torus_witness(cells)
    report = verify(g, lab)
    if not report.ok or lab.length != value:
        raise AssertionError(f"grid witness of value {value} failed verification: {report}")
    return GridReadability(value, lab)


def f_gadget_cells() -> frozenset[Cell]:
    """``G_{3,2}`` with one extra cell attached to a degree-3 cell."""
    block = {(r, c) for r in range(3) for c in (1, 2)}
    return frozenset(block | {(1, 0)})


def f_gadget() -> BipartiteGraph:
    return grid_graph(f_gadget_cells()).graph


def has_induced_p4(g: BipartiteGraph) -> bool:
    return bool(enumerate_patterns(g, PatternKind.P4))
