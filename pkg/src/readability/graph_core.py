"""Bipartite graphs, twin reduction, P4-freeness and induced pattern search.

Vertices are dense 0-based indices on each side.  The left side is ``S``
(suffix side) and the right side is ``P`` (prefix side); an edge ``(i, j)``
joins ``S``-vertex ``i`` to ``P``-vertex ``j``.

Adjacency is stored as one Python ``int`` bitmask per vertex, which keeps
very large dense graphs (chain graphs with 10^4 vertices per side) cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

Edge = tuple[int, int]


class Side(IntEnum):
    S = 0
    P = 1

    def other(self) -> "Side":
        return Side.P if self is Side.S else Side.S


class VertexRef(NamedTuple):
    side: Side
    index: int

    def __repr__(self) -> str:
        return f"{self.side.name.lower()}{self.index}"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _transpose(rows: Sequence[int], width: int, block: int = 2048) -> tuple[int, ...]:
    """Column masks of a bit matrix given by row masks, via numpy in row blocks."""
    cols = [0] * width
    if len(rows) * width <= 1 << 14:
        for i, mask in enumerate(rows):
            bit = 1 << i
            for j in _bits(mask):
                cols[j] |= bit
        return tuple(cols)
    nbytes = (width + 7) // 8
    for lo in range(0, len(rows), block):
        chunk = rows[lo:lo + block]
        buf = b"".join(m.to_bytes(nbytes, "little") for m in chunk)
        bits = np.unpackbits(np.frombuffer(buf, dtype=np.uint8).reshape(len(chunk), nbytes), axis=1, bitorder="little")
        packed = np.packbits(bits[:, :width].T, axis=1, bitorder="little")
        for j in range(width):
            part = int.from_bytes(packed[j].tobytes(), "little")
            if part:
                cols[j] |= part << lo
    return tuple(cols)


class BipartiteGraph:
    """An immutable bipartite graph ``(V_s, V_p, E)``.

    Args:
        ns: number of ``S`` vertices.
        np: number of ``P`` vertices.
        edges: iterable of ``(i, j)`` pairs with ``0 <= i < ns`` and
            ``0 <= j < np``.  Duplicates are rejected.
    """

    __slots__ = ("ns", "np", "s_adj", "p_adj", "__dict__")

    def __init__(self, ns: int, np: int, edges: Iterable[Edge] = ()):
        if ns < 0 or np < 0:
            raise ValueError("vertex counts must be non-negative")
        s_adj = [0] * ns
        p_adj = [0] * np
        for i, j in edges:
            if not (0 <= i < ns and 0 <= j < np):
                raise ValueError(f"edge ({i}, {j}) out of range for {ns}x{np}")
            if s_adj[i] >> j & 1:
                raise ValueError(f"duplicate edge ({i}, {j})")
            s_adj[i] |= 1 << j
            p_adj[j] |= 1 << i
        self.ns = ns
        self.np = np
        self.s_adj: tuple[int, ...] = tuple(s_adj)
        self.p_adj: tuple[int, ...] = tuple(p_adj)

    @classmethod
    def from_masks(cls, ns: int, np: int, s_adj: Sequence[int]) -> "BipartiteGraph":
        """Build from per-``S``-vertex neighbour bitmasks (no duplicate checks needed)."""
        g = cls.__new__(cls)
        g.ns = ns
        g.np = np
        g.s_adj = tuple(s_adj)
        if len(g.s_adj) != ns:
            raise ValueError("need one mask per S vertex")
        limit = 1 << np
        for i, mask in enumerate(g.s_adj):
            if mask < 0 or mask >= limit:
                raise ValueError(f"mask of s{i} out of range")
        g.p_adj = _transpose(g.s_adj, np)
        return g

    # -- basic queries -------------------------------------------------

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(self.iter_edges())

    def iter_edges(self) -> Iterator[Edge]:
        """Edges in lexicographic order."""
        for i, mask in enumerate(self.s_adj):
            for j in _bits(mask):
                yield (i, j)

    def sorted_edges(self) -> list[Edge]:
        return list(self.iter_edges())

    @cached_property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.s_adj)

    @property
    def num_vertices(self) -> int:
        return self.ns + self.np

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.s_adj[i] >> j & 1)

    def neighbors(self, v: VertexRef) -> list[int]:
        """Indices (on the opposite side) adjacent to ``v``."""
        return list(_bits(self.mask(v)))

    def mask(self, v: VertexRef) -> int:
        return self.s_adj[v.index] if v.side is Side.S else self.p_adj[v.index]

    def degree(self, v: VertexRef) -> int:
        return self.mask(v).bit_count()

    def vertices(self) -> list[VertexRef]:
        return [VertexRef(Side.S, i) for i in range(self.ns)] + [
            VertexRef(Side.P, j) for j in range(self.np)
        ]

    def swap_sides(self) -> "BipartiteGraph":
        return BipartiteGraph.from_masks(self.np, self.ns, self.p_adj)

    def without_edges(self, removed: Iterable[Edge]) -> "BipartiteGraph":
        s_adj = list(self.s_adj)
        for i, j in removed:
            if not s_adj[i] >> j & 1:
                raise ValueError(f"({i}, {j}) is not an edge")
            s_adj[i] &= ~(1 << j)
        return BipartiteGraph.from_masks(self.ns, self.np, s_adj)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.ns, self.np, self.s_adj) == (other.ns, other.np, other.s_adj)

    def __hash__(self) -> int:
        return hash((self.ns, self.np, self.s_adj))

    def __repr__(self) -> str:
        return f"BipartiteGraph(ns={self.ns}, np={self.np}, |E|={self.num_edges})"


# ---------------------------------------------------------------------------
# global vertex numbering: S vertices first, then P vertices


def _gid(g: BipartiteGraph, v: VertexRef) -> int:
    return v.index if v.side is Side.S else g.ns + v.index


def _ref(g: BipartiteGraph, gid: int) -> VertexRef:
    return VertexRef(Side.S, gid) if gid < g.ns else VertexRef(Side.P, gid - g.ns)


def _adjacency_lists(g: BipartiteGraph) -> list[list[int]]:
    """Neighbour lists over global ids, each sorted ascending."""
    adj = [[g.ns + j for j in _bits(m)] for m in g.s_adj]
    adj += [list(_bits(m)) for m in g.p_adj]
    return adj


def _edge(g: BipartiteGraph, a: int, b: int) -> Edge:
    """The ``(s, p)`` edge between global ids ``a`` and ``b``."""
    if a < g.ns:
        return (a, b - g.ns)
    return (b, a - g.ns)


# ---------------------------------------------------------------------------
# simple operations


def max_degree(g: BipartiteGraph) -> int:
    return max((m.bit_count() for m in g.s_adj + g.p_adj), default=0)


def is_edgeless(g: BipartiteGraph) -> bool:
    return not any(g.s_adj)


def induced_subgraph(
    g: BipartiteGraph, s_vertices: Sequence[int], p_vertices: Sequence[int]
) -> BipartiteGraph:
    """Subgraph induced by the given vertices; new index ``k`` is ``s_vertices[k]``."""
    for name, verts, limit in (("S", s_vertices, g.ns), ("P", p_vertices, g.np)):
        if len(set(verts)) != len(verts):
            raise ValueError(f"repeated {name} vertex")
        for v in verts:
            if not 0 <= v < limit:
                raise ValueError(f"{name} vertex {v} out of range")
    masks = []
    for i in s_vertices:
        row = g.s_adj[i]
        m = 0
        for k, j in enumerate(p_vertices):
            if row >> j & 1:
                m |= 1 << k
        masks.append(m)
    return BipartiteGraph.from_masks(len(s_vertices), len(p_vertices), masks)


def disjoint_union(g: BipartiteGraph, h: BipartiteGraph) -> BipartiteGraph:
    """``h``'s vertices are appended after ``g``'s on each side."""
    masks = list(g.s_adj) + [m << g.np for m in h.s_adj]
    return BipartiteGraph.from_masks(g.ns + h.ns, g.np + h.np, masks)


@dataclass(frozen=True)
class VertexMap:
    """Maps component-local indices back to indices of the parent graph."""

    s: tuple[int, ...]
    p: tuple[int, ...]


def connected_components(g: BipartiteGraph) -> list[tuple[BipartiteGraph, VertexMap]]:
    """Split ``g`` into connected components.

    Components are ordered by their smallest vertex (all ``S`` vertices
    precede all ``P`` vertices); isolated vertices form singleton components.
    """
    n = g.num_vertices
    adj = _adjacency_lists(g)
    seen = [False] * n
    result = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        s_verts = sorted(v for v in comp if v < g.ns)
        p_verts = sorted(v - g.ns for v in comp if v >= g.ns)
        result.append((induced_subgraph(g, s_verts, p_verts), VertexMap(tuple(s_verts), tuple(p_verts))))
    return result


def is_connected(g: BipartiteGraph) -> bool:
    return g.num_vertices > 0 and len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# twins


@dataclass(frozen=True)
class TwinQuotient:
    """Twin classes of a graph and the map from vertices to class indices."""

    s_classes: tuple[tuple[int, ...], ...]
    p_classes: tuple[tuple[int, ...], ...]
    s_class_of: tuple[int, ...]
    p_class_of: tuple[int, ...]


def _group(masks: Sequence[int]) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    by_mask: dict[int, list[int]] = {}
    for v, m in enumerate(masks):
        by_mask.setdefault(m, []).append(v)
    classes = tuple(tuple(c) for c in by_mask.values())  # insertion order = smallest member order
    class_of = [0] * len(masks)
    for k, c in enumerate(classes):
        for v in c:
            class_of[v] = k
    return classes, tuple(class_of)


def twin_classes(g: BipartiteGraph) -> TwinQuotient:
    s_classes, s_of = _group(g.s_adj)
    p_classes, p_of = _group(g.p_adj)
    return TwinQuotient(s_classes, p_classes, s_of, p_of)


def has_twins(g: BipartiteGraph) -> bool:
    q = twin_classes(g)
    return len(q.s_classes) < g.ns or len(q.p_classes) < g.np


def twin_free_reduction(g: BipartiteGraph) -> tuple[BipartiteGraph, TwinQuotient]:
    """Quotient of ``g`` by the twin relation.

    Class ``k`` on each side becomes vertex ``k`` of the result; classes are
    numbered by their smallest member.
    """
    q = twin_classes(g)
    masks = []
    for cls in q.s_classes:
        row = g.s_adj[cls[0]]
        m = 0
        for j in _bits(row):
            m |= 1 << q.p_class_of[j]
        masks.append(m)
    return BipartiteGraph.from_masks(len(q.s_classes), len(q.p_classes), masks), q


# ---------------------------------------------------------------------------
# P4-freeness


def is_p4_free(g: BipartiteGraph) -> bool:
    """True iff ``g`` has no induced path on four vertices.

    In a bipartite graph an induced ``a - s - p - d`` exists exactly when two
    vertices ``s``, ``d`` sharing the neighbour ``p`` have different
    neighbourhoods, so it suffices to compare neighbourhoods along edges.
    """
    for j, col in enumerate(g.p_adj):
        mask = None
        for i in _bits(col):
            if mask is None:
                mask = g.s_adj[i]
            elif g.s_adj[i] != mask:
                return False
    return True


def is_biclique_union(g: BipartiteGraph) -> bool:
    """Independent check: every component is complete bipartite."""
    for comp, _ in connected_components(g):
        if comp.num_edges != comp.ns * comp.np:
            return False
    return True


# ---------------------------------------------------------------------------
# induced pattern enumeration


class PatternKind(str, Enum):
    P4 = "P4"
    C4 = "C4"
    C6 = "C6"
    DOMINO = "Domino"
    FORK = "Fork"


PATTERN_SIZE = {
    PatternKind.P4: 4,
    PatternKind.C4: 4,
    PatternKind.C6: 6,
    PatternKind.DOMINO: 6,
    PatternKind.FORK: 5,
}


@dataclass(frozen=True)
class PatternOccurrence:
    """An induced copy of a small pattern with a fixed edge labelling.

    Edge conventions (``x1..xk`` are ``vertices`` in order):

    * ``P4``: path ``x1 x2 x3 x4``; ``e_i = x_i x_{i+1}``; ``x1 < x4``.
    * ``C4``/``C6``: cycle ``x1 .. xk``; ``e_i = x_i x_{i+1}`` (indices mod k);
      ``x1`` is the smallest vertex and ``x2 < xk``.
    * ``Domino``: outer cycle ``x1 .. x6`` with ``e1..e6`` as for ``C6``
      and the chord ``e7 = x3 x6``; ``x3`` is the smaller chord endpoint and
      ``x4`` the smaller of its two cycle neighbours.
    * ``Fork``: ``x2`` is the degree-3 centre with leaves ``x1 < x5``; the
      path ``x2 x3 x4`` continues through the degree-2 vertex ``x3``.
      ``e1 = x1x2, e2 = x2x3, e3 = x3x4, e4 = x2x5``.

    Edges are stored as ``(s, p)`` pairs.
    """

    kind: PatternKind
    vertices: tuple[VertexRef, ...]
    edges: tuple[Edge, ...]

    def edge(self, k: int) -> Edge:
        """The 1-based edge ``e_k``."""
        return self.edges[k - 1]


def _cycles(g: BipartiteGraph, adj: list[list[int]], length: int) -> list[list[int]]:
    """Simple cycles as vertex lists ``[x1..xk]`` with x1 minimal and x2 < xk."""
    out = []

    def extend(path: list[int], used: set[int]) -> None:
        last = path[-1]
        if len(path) == length:
            if path[0] in adj_sets[last] and path[1] < path[-1]:
                out.append(list(path))
            return
        for w in adj[last]:
            if w > path[0] and w not in used:
                path.append(w)
                used.add(w)
                extend(path, used)
                used.discard(w)
                path.pop()

    adj_sets = [set(a) for a in adj]
    for v in range(len(adj)):
        extend([v], {v})
    return out


def _cycle_edges(g: BipartiteGraph, cyc: Sequence[int]) -> tuple[Edge, ...]:
    k = len(cyc)
    return tuple(_edge(g, cyc[t], cyc[(t + 1) % k]) for t in range(k))


def _domino_occurrence(g: BipartiteGraph, cyc: list[int], chord: tuple[int, int]) -> PatternOccurrence:
    # Rotate/reflect the outer cycle so the chord joins positions 3 and 6, the
    # smaller chord endpoint sits at x3 and x4 is the smaller of its two cycle
    # neighbours (excluding the chord).
    a, b = sorted(chord)
    pos = cyc.index(a)
    nxt, prv = cyc[(pos + 1) % 6], cyc[(pos - 1) % 6]
    step = 1 if nxt < prv else -1
    # x3 = a, x4 = a + step, ..., x6 = b
    order = [cyc[(pos + step * (t - 2)) % 6] for t in range(6)]
    assert order[2] == a and order[5] == b
    edges = _cycle_edges(g, order) + (_edge(g, a, b),)
    return PatternOccurrence(PatternKind.DOMINO, tuple(_ref(g, v) for v in order), edges)


def enumerate_patterns(g: BipartiteGraph, kind: PatternKind | str) -> list[PatternOccurrence]:
    """All induced occurrences of ``kind``, one per vertex set.

    Output is sorted lexicographically by sorted vertex list.  Cost is
    polynomial but naive: six-cycles are found by depth-first extension,
    roughly ``O(n * d^5)``.
    """
    kind = PatternKind(kind)
    adj = _adjacency_lists(g)
    adj_sets = [set(a) for a in adj]
    found: dict[tuple[int, ...], PatternOccurrence] = {}

    if kind is PatternKind.P4:
        for b in range(g.ns):
            for c in adj[b]:
                for a in adj[c]:
                    if a == b:
                        continue
                    for d in adj[b]:
                        if d == c or d in adj_sets[a]:
                            continue
                        # path a - c - b - d with middle edge (c, b)
                        path = [a, c, b, d] if a < d else [d, b, c, a]
                        key = tuple(sorted(path))
                        found[key] = PatternOccurrence(
                            kind,
                            tuple(_ref(g, v) for v in path),
                            tuple(_edge(g, path[t], path[t + 1]) for t in range(3)),
                        )
    elif kind is PatternKind.C4:
        for cyc in _cycles(g, adj, 4):
            found[tuple(sorted(cyc))] = PatternOccurrence(
                kind, tuple(_ref(g, v) for v in cyc), _cycle_edges(g, cyc)
            )
    elif kind in (PatternKind.C6, PatternKind.DOMINO):
        for cyc in _cycles(g, adj, 6):
            chords = [(cyc[t], cyc[t + 3]) for t in range(3) if cyc[t + 3] in adj_sets[cyc[t]]]
            key = tuple(sorted(cyc))
            if kind is PatternKind.C6 and not chords:
                found[key] = PatternOccurrence(kind, tuple(_ref(g, v) for v in cyc), _cycle_edges(g, cyc))
            elif kind is PatternKind.DOMINO and len(chords) == 1 and key not in found:
                found[key] = _domino_occurrence(g, cyc, chords[0])
    elif kind is PatternKind.FORK:
        for c in range(len(adj)):
            if len(adj[c]) < 3:
                continue
            for m in adj[c]:
                for y in adj[m]:
                    if y == c:
                        continue
                    leaves = [w for w in adj[c] if w != m and w not in adj_sets[y]]
                    for a, b in combinations(leaves, 2):
                        verts = [a, c, m, y, b]
                        edges = (_edge(g, a, c), _edge(g, c, m), _edge(g, m, y), _edge(g, c, b))
                        found[tuple(sorted(verts))] = PatternOccurrence(
                            kind, tuple(_ref(g, v) for v in verts), edges
                        )
    return [found[k] for k in sorted(found)]


def occurrence_vertex_key(g: BipartiteGraph, occ: PatternOccurrence) -> tuple[int, ...]:
    return tuple(sorted(_gid(g, v) for v in occ.vertices))
