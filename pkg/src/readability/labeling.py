"""Overlap labelings over integer alphabets.

A label is a tuple of non-negative ints.  An ``S`` label ``x`` overlaps a
``P`` label ``y`` when some non-empty suffix of ``x`` equals the prefix of
``y`` of the same length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph_core import BipartiteGraph, TwinQuotient, VertexMap, connected_components, is_p4_free

Label = tuple[int, ...]


@dataclass(frozen=True)
class Labeling:
    s_labels: tuple[Label, ...]
    p_labels: tuple[Label, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s_labels", tuple(tuple(x) for x in self.s_labels))
        object.__setattr__(self, "p_labels", tuple(tuple(x) for x in self.p_labels))
        for lab in self.s_labels + self.p_labels:
            if any(c < 0 for c in lab):
                raise ValueError("symbols must be non-negative")

    @property
    def length(self) -> int:
        """Maximum label length (0 for an empty labeling)."""
        return max((len(x) for x in self.s_labels + self.p_labels), default=0)

    @property
    def alphabet(self) -> frozenset[int]:
        return frozenset(c for lab in self.s_labels + self.p_labels for c in lab)

    def max_symbol(self) -> int:
        return max(self.alphabet, default=-1)


@dataclass(frozen=True)
class VerificationReport:
    missing: tuple[tuple[int, int], ...] = field(default=())
    extra: tuple[tuple[int, int], ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra

    def __bool__(self) -> bool:
        return self.ok


def overlaps(x: Sequence[int], y: Sequence[int]) -> bool:
    return overlap_value(x, y) is not None


def overlap_value(x: Sequence[int], y: Sequence[int]) -> int | None:
    """Smallest ``i >= 1`` with ``suffix_i(x) == prefix_i(y)``, or ``None``."""
    x = tuple(x)
    y = tuple(y)
    for i in range(1, min(len(x), len(y)) + 1):
        if x[len(x) - i:] == y[:i]:
            return i
    return None


def properly_overlaps(x: Sequence[int], y: Sequence[int]) -> bool:
    x = tuple(x)
    y = tuple(y)
    return any(x[len(x) - i:] == y[:i] for i in range(1, min(len(x), len(y))))


# ---------------------------------------------------------------------------
# verification


def _mask_rows(masks: Sequence[int], width: int, lo: int, hi: int) -> np.ndarray:
    nbytes = (width + 7) // 8
    buf = b"".join(m.to_bytes(nbytes, "little") for m in masks[lo:hi])
    arr = np.frombuffer(buf, dtype=np.uint8).reshape(hi - lo, nbytes)
    return np.unpackbits(arr, axis=1, bitorder="little")[:, :width].astype(bool)


class _Interned:
    """Per-length integer ids of every ``S`` suffix and ``P`` prefix.

    ``suf[i - 1, k]`` equals ``pre[i - 1, m]`` exactly when the length-``i``
    suffix of ``s_labels[k]`` equals the length-``i`` prefix of
    ``p_labels[m]``; too-short labels get ids that never match.
    """

    def __init__(self, s_labels: Sequence[Label], p_labels: Sequence[Label]):
        top = min(max(map(len, s_labels), default=0), max(map(len, p_labels), default=0))
        self.suf = np.full((top, len(s_labels)), -1, dtype=np.int64)
        self.pre = np.full((top, len(p_labels)), -2, dtype=np.int64)
        self.order = []
        self.sorted_pre = []
        for i in range(1, top + 1):
            ids: dict[Label, int] = {}
            row = self.suf[i - 1]
            for k, x in enumerate(s_labels):
                if len(x) >= i:
                    row[k] = ids.setdefault(x[len(x) - i:], len(ids))
            col = self.pre[i - 1]
            for m, y in enumerate(p_labels):
                if len(y) >= i:
                    col[m] = ids.get(y[:i], -2)
            order = np.argsort(col, kind="stable")
            self.order.append(order)
            self.sorted_pre.append(col[order])

    def fill(self, out: np.ndarray, lo: int, hi: int) -> None:
        """Set ``out[k - lo, m]`` for every overlapping pair with ``lo <= k < hi``."""
        for i in range(len(self.order)):
            sid = self.suf[i, lo:hi]
            order, spre = self.order[i], self.sorted_pre[i]
            left = np.searchsorted(spre, sid, side="left")
            right = np.searchsorted(spre, sid, side="right")
            counts = np.where(sid >= 0, right - left, 0)
            total = int(counts.sum())
            if total == 0:
                continue
            rows = np.repeat(np.arange(hi - lo), counts)
            starts = np.repeat(left, counts)
            offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
            out[rows, order[starts + offsets]] = True


def overlap_matrix(s_labels: Sequence[Label], p_labels: Sequence[Label]) -> np.ndarray:
    """Boolean matrix with ``[i, j] = overlaps(s_labels[i], p_labels[j])``."""
    out = np.zeros((len(s_labels), len(p_labels)), dtype=bool)
    if s_labels and p_labels:
        _Interned(s_labels, p_labels).fill(out, 0, len(s_labels))
    return out


def verify(g: BipartiteGraph, labeling: Labeling, block_cells: int = 1 << 22) -> VerificationReport:
    """Compare the overlap relation of ``labeling`` with the edges of ``g``.

    Exhaustive over every pair and every overlap length.  Rows are handled
    in blocks of about ``block_cells`` matrix entries to bound memory.
    """
    if len(labeling.s_labels) != g.ns or len(labeling.p_labels) != g.np:
        raise ValueError(
            f"labeling has {len(labeling.s_labels)}+{len(labeling.p_labels)} labels, graph has {g.ns}+{g.np} vertices"
        )
    missing: list[tuple[int, int]] = []
    extra: list[tuple[int, int]] = []
    if g.ns == 0 or g.np == 0:
        return VerificationReport()
    interned = _Interned(labeling.s_labels, labeling.p_labels)
    step = max(1, block_cells // g.np)
    for lo in range(0, g.ns, step):
        hi = min(g.ns, lo + step)
        ov = np.zeros((hi - lo, g.np), dtype=bool)
        interned.fill(ov, lo, hi)
        adj = _mask_rows(g.s_adj, g.np, lo, hi)
        for i, j in zip(*np.nonzero(adj & ~ov)):
            missing.append((int(i) + lo, int(j)))
        for i, j in zip(*np.nonzero(ov & ~adj)):
            extra.append((int(i) + lo, int(j)))
    return VerificationReport(tuple(missing), tuple(extra))


def verify_naive(g: BipartiteGraph, labeling: Labeling) -> VerificationReport:
    """Pure-Python pairwise verifier, kept as a cross-check of :func:`verify`."""
    if len(labeling.s_labels) != g.ns or len(labeling.p_labels) != g.np:
        raise ValueError("labeling does not match the graph")
    missing, extra = [], []
    for i, x in enumerate(labeling.s_labels):
        for j, y in enumerate(labeling.p_labels):
            ov = overlaps(x, y)
            if g.has_edge(i, j) and not ov:
                missing.append((i, j))
            elif ov and not g.has_edge(i, j):
                extra.append((i, j))
    return VerificationReport(tuple(missing), tuple(extra))


# ---------------------------------------------------------------------------
# combinators


def restrict(labeling: Labeling, s_vertices: Sequence[int], p_vertices: Sequence[int]) -> Labeling:
    """Labels of the chosen vertices, in the given order (matches ``induced_subgraph``)."""
    return Labeling(
        tuple(labeling.s_labels[i] for i in s_vertices),
        tuple(labeling.p_labels[j] for j in p_vertices),
    )


def _shift(lab: Label, offset: int) -> Label:
    return tuple(c + offset for c in lab)


def union_disjoint(first: Labeling, second: Labeling) -> Labeling:
    """Labeling of the disjoint union; ``second`` is renamed past ``first``'s symbols."""
    off = first.max_symbol() + 1
    return Labeling(
        first.s_labels + tuple(_shift(x, off) for x in second.s_labels),
        first.p_labels + tuple(_shift(y, off) for y in second.p_labels),
    )


def reverse(labeling: Labeling) -> Labeling:
    """Reverse every label and swap sides; valid for ``g.swap_sides()``."""
    return Labeling(
        tuple(y[::-1] for y in labeling.p_labels),
        tuple(x[::-1] for x in labeling.s_labels),
    )


def lift_to_twins(g: BipartiteGraph, reduced: Labeling, quotient: TwinQuotient) -> Labeling:
    """Give every vertex of ``g`` the label of its twin class."""
    if len(quotient.s_class_of) != g.ns or len(quotient.p_class_of) != g.np:
        raise ValueError("quotient does not belong to this graph")
    return Labeling(
        tuple(reduced.s_labels[k] for k in quotient.s_class_of),
        tuple(reduced.p_labels[k] for k in quotient.p_class_of),
    )


def combine_components(ns: int, np_: int, parts: Iterable[tuple[Labeling, VertexMap]]) -> Labeling:
    """Place per-component labelings back into a graph with ``ns + np_`` vertices.

    Each part's symbols are shifted into a fresh range, so labels from
    different components never overlap.
    """
    s_out: list[Label | None] = [None] * ns
    p_out: list[Label | None] = [None] * np_
    offset = 0
    for lab, vmap in parts:
        for k, i in enumerate(vmap.s):
            s_out[i] = _shift(lab.s_labels[k], offset)
        for k, j in enumerate(vmap.p):
            p_out[j] = _shift(lab.p_labels[k], offset)
        offset += lab.max_symbol() + 1
    if any(x is None for x in s_out) or any(y is None for y in p_out):
        raise ValueError("components do not cover every vertex")
    return Labeling(tuple(s_out), tuple(p_out))  # type: ignore[arg-type]


def empty_labeling(g: BipartiteGraph) -> Labeling:
    return Labeling(((),) * g.ns, ((),) * g.np)


def biclique_labeling(g: BipartiteGraph) -> Labeling:
    """Length-1 labeling of a disjoint union of bicliques.

    Component ``k`` (among those with edges) gets symbol ``k``; isolated
    vertices get unique symbols after those.  An edgeless graph gets the
    all-empty labeling, of length 0.
    """
    if not is_p4_free(g):
        raise ValueError("graph contains an induced P4; it is not a disjoint union of bicliques")
    if not any(g.s_adj):
        return empty_labeling(g)
    s_out: list[Label] = [()] * g.ns
    p_out: list[Label] = [()] * g.np
    comps = connected_components(g)
    k = 0
    for comp, vmap in comps:
        if comp.num_edges:
            for i in vmap.s:
                s_out[i] = (k,)
            for j in vmap.p:
                p_out[j] = (k,)
            k += 1
    for comp, vmap in comps:
        if not comp.num_edges:
            for i in vmap.s:
                s_out[i] = (k,)
            for j in vmap.p:
                p_out[j] = (k,)
            k += 1
    return Labeling(tuple(s_out), tuple(p_out))
