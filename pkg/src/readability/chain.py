"""Bipartite chain graphs and their labels built from forward-matching sequences.

``S_2 = (20, 0, 01)`` is grown round by round: in round ``r`` the
concatenation of every neighbouring pair whose lengths sum to ``r`` is
inserted between them.  The number of strings after round ``r`` is
``Phi(r) + 1`` where ``Phi`` is the totient summatory function, so labels
of length ``r`` accommodate ``C_{n,n}`` with ``n`` up to about ``0.3 r^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .graph_core import BipartiteGraph
from .labeling import Label, Labeling, overlaps, properly_overlaps

BASE_STRINGS: tuple[Label, ...] = ((2, 0), (0,), (0, 1))
DIRECT_TOTIENT_LIMIT = 1000


@dataclass(frozen=True)
class FMSequence:
    strings: tuple[Label, ...]
    round: int

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.strings)

    def __len__(self) -> int:
        return len(self.strings)


@dataclass(frozen=True)
class LengthSequence:
    lengths: tuple[int, ...]
    round: int

    def right_half(self) -> tuple[int, ...]:
        """The entries from the central 1 to the end."""
        return self.lengths[self.lengths.index(1):]

    def __len__(self) -> int:
        return len(self.lengths)


def chain_graph(n: int) -> BipartiteGraph:
    """``C_{n,n}``: ``s_i`` is adjacent to ``p_j`` iff ``i <= j``."""
    if n < 1:
        raise ValueError("chain graph needs n >= 1")
    full = (1 << n) - 1
    return BipartiteGraph.from_masks(n, n, [full & ~((1 << i) - 1) for i in range(n)])


# ---------------------------------------------------------------------------
# totients


def totient_direct(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return sum(1 for i in range(1, k + 1) if math.gcd(i, k) == 1)


@lru_cache(maxsize=8)
def totient_table(limit: int) -> tuple[int, ...]:
    """``phi(0..limit)`` by a multiplicative sieve (``phi(0)`` is stored as 0)."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for m in range(p, limit + 1, p):
                phi[m] -= phi[m] // p
    if limit >= 0:
        phi[0] = 0
    return tuple(phi)


def totient(k: int) -> int:
    """Euler's phi; direct gcd counting up to 1000, sieve beyond."""
    if k < 1:
        raise ValueError("k must be positive")
    if k <= DIRECT_TOTIENT_LIMIT:
        return totient_direct(k)
    return totient_table(k)[k]


def totient_summatory(r: int) -> int:
    if r < 1:
        raise ValueError("r must be positive")
    return sum(totient_table(r))


# ---------------------------------------------------------------------------
# forward-matching sequences


def is_forward_matching(strings: Sequence[Sequence[int]]) -> bool:
    """Brute-force check of the forward-matching property.

    No string may properly overlap itself, and string ``i`` overlaps string
    ``j`` exactly when ``i <= j``.
    """
    strs = [tuple(s) for s in strings]
    for s in strs:
        if properly_overlaps(s, s):
            return False
    for i, x in enumerate(strs):
        for j, y in enumerate(strs):
            if overlaps(x, y) != (i <= j):
                return False
    return True


def expand(seq: FMSequence) -> FMSequence:
    """One round of growth: ``S_{r-1}`` to ``S_r``."""
    r = seq.round + 1
    strings = seq.strings
    out: list[Label] = []
    for a, b in zip(strings, strings[1:]):
        out.append(a)
        if len(a) + len(b) == r:
            out.append(a + b)
    out.append(strings[-1])
    return FMSequence(tuple(out), r)


def iter_S(r_max: int) -> Iterator[FMSequence]:
    seq = FMSequence(BASE_STRINGS, 2)
    yield seq
    while seq.round < r_max:
        seq = expand(seq)
        yield seq


def build_S(r: int) -> FMSequence:
    if r < 2:
        raise ValueError("r must be at least 2")
    return _build_S_cached(r)


@lru_cache(maxsize=32)
def _build_S_cached(r: int) -> FMSequence:
    seq = FMSequence(BASE_STRINGS, 2)
    while seq.round < r:
        seq = expand(seq)
    return seq


def iter_B(r_max: int) -> Iterator[LengthSequence]:
    """``B_2, B_3, ..., B_{r_max}`` computed by integer insertion alone."""
    cur = [2, 1, 2]
    r = 2
    yield LengthSequence(tuple(cur), r)
    while r < r_max:
        r += 1
        nxt = []
        for x, y in zip(cur, cur[1:]):
            nxt.append(x)
            if x + y == r:
                nxt.append(r)
        nxt.append(cur[-1])
        cur = nxt
        yield LengthSequence(tuple(cur), r)


def build_B(r: int) -> LengthSequence:
    if r < 2:
        raise ValueError("r must be at least 2")
    for b in iter_B(r):
        pass
    return b


# ---------------------------------------------------------------------------
# labeling C_{n,n}


def chain_round(n: int) -> int:
    """Smallest ``r >= 2`` with ``Phi(r) + 1 >= n``."""
    if n < 1:
        raise ValueError("n must be positive")
    r = 2
    total = totient_summatory(2)
    while total + 1 < n:
        r += 1
        total += totient(r)
    return r


def label_chain(n: int) -> Labeling:
    """Labeling of ``C_{n,n}`` of length ``O(sqrt n)`` over ``{0, 1, 2}``.

    Both ``s_i`` and ``p_i`` receive the ``i``-th string of ``S_r`` for the
    smallest adequate ``r``; only the first ``n`` strings are used.
    """
    r = chain_round(n)
    strings = build_S(r).strings[:n]
    return Labeling(strings, strings)


def chain_lower_bound(n: int) -> float:
    """``log2(n + 3) - 1``, a lower bound on the readability of ``C_{n,n}``."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.log2(n + 3) - 1
