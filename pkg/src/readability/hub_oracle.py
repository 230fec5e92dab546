"""HUB decompositions and exhaustive oracles for small graphs.

Everything here is brute force with an explicit :class:`OracleBudget`;
exceeding it raises :class:`BudgetExceeded` instead of returning a
truncated answer.  The oracles deliberately avoid the pattern machinery in
:mod:`readability.graph_core` and re-derive induced shapes from vertex
subsets, so they can cross-check it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Mapping, Sequence

from .graph_core import BipartiteGraph, Edge, PatternKind, has_twins, is_connected, is_p4_free
from .labeling import Labeling, overlap_value, overlaps, verify


class BudgetExceeded(RuntimeError):
    """A brute-force search would exceed its configured limits."""


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 16
    max_edges: int = 40
    max_levels: int = 6
    max_label_length: int = 3
    max_alphabet: int = 12
    time_cap: float = 120.0

    def __post_init__(self) -> None:
        for name in ("max_vertices", "max_edges", "max_levels", "max_label_length", "max_alphabet"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.time_cap <= 0:
            raise ValueError("time_cap must be positive")

    def check_graph(self, g: BipartiteGraph) -> None:
        if g.num_vertices > self.max_vertices:
            raise BudgetExceeded(f"{g.num_vertices} vertices > budget {self.max_vertices}")
        if g.num_edges > self.max_edges:
            raise BudgetExceeded(f"{g.num_edges} edges > budget {self.max_edges}")


class _Clock:
    def __init__(self, cap: float):
        self.deadline = time.monotonic() + cap
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.ticks & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time cap exceeded")


# ---------------------------------------------------------------------------
# HUB decompositions


@dataclass(frozen=True)
class HubAssignment:
    """Edge levels ``w(e)`` in ``1..k``."""

    k: int
    w: Mapping[Edge, int] = field(hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", dict(sorted(self.w.items())))
        for e, lvl in self.w.items():
            if not 1 <= lvl <= self.k:
                raise ValueError(f"edge {e} has level {lvl} outside 1..{self.k}")

    def level_graph(self, g: BipartiteGraph, level: int) -> BipartiteGraph:
        return BipartiteGraph(g.ns, g.np, [e for e, lvl in self.w.items() if lvl == level])


def _level_masks(g: BipartiteGraph, h: HubAssignment) -> list[tuple[list[int], list[int]]]:
    levels = [([0] * g.ns, [0] * g.np) for _ in range(h.k + 1)]
    for (i, j), lvl in h.w.items():
        levels[lvl][0][i] |= 1 << j
        levels[lvl][1][j] |= 1 << i
    return levels


def _hub_valid(g: BipartiteGraph, k: int, levels: list[tuple[list[int], list[int]]]) -> bool:
    for lvl in range(1, k + 1):
        if not is_p4_free(BipartiteGraph.from_masks(g.ns, g.np, levels[lvl][0])):
            return False
    for lvl in range(2, k + 1):
        for side in (0, 1):
            masks = levels[lvl][side]
            groups: dict[int, list[int]] = {}
            for v, m in enumerate(masks):
                if m:
                    groups.setdefault(m, []).append(v)
            for members in groups.values():
                if len(members) < 2:
                    continue
                for below in range(1, lvl):
                    lower = levels[below][side]
                    first = lower[members[0]]
                    if any(lower[v] != first for v in members[1:]):
                        return False
    return True


def is_hub_decomposition(g: BipartiteGraph, h: HubAssignment) -> bool:
    """Both HUB conditions, checked literally.

    (i) every level graph is a disjoint union of bicliques; (ii) vertices
    that are non-isolated twins at some level are twins at every lower level.
    """
    if set(h.w) != g.edges:
        raise ValueError("assignment does not cover exactly the edges of the graph")
    return _hub_valid(g, h.k, _level_masks(g, h))


def iter_hub_decompositions(
    g: BipartiteGraph, k: int, budget: OracleBudget | None = None, surjective: bool = True
) -> Iterator[HubAssignment]:
    """Every valid level assignment with ``k`` levels, in lexicographic order.

    With ``surjective`` only assignments using every level are produced.
    A branch is cut as soon as some level already holds an induced P4
    whose closing edge is unavailable.
    """
    budget = budget or OracleBudget()
    budget.check_graph(g)
    if k > budget.max_levels:
        raise BudgetExceeded(f"{k} levels > budget {budget.max_levels}")
    clock = _Clock(budget.time_cap)
    edges = g.sorted_edges()
    pos = {e: t for t, e in enumerate(edges)}
    levels = [([0] * g.ns, [0] * g.np) for _ in range(k + 1)]
    assign = [0] * len(edges)
    used = [0] * (k + 1)

    def chord_available(s: int, p: int, lvl: int) -> bool:
        t = pos.get((s, p))
        return t is not None and assign[t] in (0, lvl)

    def doomed(lvl: int, t: int) -> bool:
        # An induced P4 s-p-s2-p2 at a level can only be repaired by its
        # chord (s, p2) joining that level later.  Adding (i, j) at lvl can
        # create such a P4, and it can take away the chord of one elsewhere.
        i, j = edges[t]
        s_m, p_m = levels[lvl]
        for s in _bits(p_m[j] & ~(1 << i)):  # (i, j) in the middle
            for p2 in _bits(s_m[i] & ~(1 << j)):
                if not s_m[s] >> p2 & 1 and not chord_available(s, p2, lvl):
                    return True
        for s2 in _bits(p_m[j] & ~(1 << i)):  # (i, j) at the s end
            for p2 in _bits(s_m[s2] & ~(1 << j)):
                if not s_m[i] >> p2 & 1 and not chord_available(i, p2, lvl):
                    return True
        for p in _bits(s_m[i] & ~(1 << j)):  # (i, j) at the p end
            for s in _bits(p_m[p] & ~(1 << i)):
                if not s_m[s] >> j & 1 and not chord_available(s, j, lvl):
                    return True
        for other in range(1, k + 1):  # (i, j) was the chord of i-p-s2-j
            if other == lvl:
                continue
            o_s, o_p = levels[other]
            for p in _bits(o_s[i]):
                if o_p[p] & o_p[j] & ~(1 << i):
                    return True
        return False

    def rec(t: int) -> Iterator[HubAssignment]:
        clock.tick()
        if t == len(edges):
            if surjective and any(used[lvl] == 0 for lvl in range(1, k + 1)):
                return
            if _hub_valid(g, k, levels):
                yield HubAssignment(k, {edges[u]: assign[u] for u in range(len(edges))})
            return
        if surjective and sum(1 for lvl in range(1, k + 1) if used[lvl] == 0) > len(edges) - t:
            return
        i, j = edges[t]
        for lvl in range(1, k + 1):
            assign[t] = lvl
            used[lvl] += 1
            levels[lvl][0][i] |= 1 << j
            levels[lvl][1][j] |= 1 << i
            if not doomed(lvl, t):
                yield from rec(t + 1)
            levels[lvl][0][i] &= ~(1 << j)
            levels[lvl][1][j] &= ~(1 << i)
            used[lvl] -= 1
            assign[t] = 0

    if not edges:
        if k == 0:
            yield HubAssignment(0, {})
        return
    yield from rec(0)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def min_hub_bruteforce(
    g: BipartiteGraph, budget: OracleBudget | None = None, max_k: int | None = None
) -> tuple[int, HubAssignment]:
    """Smallest ``k`` admitting a HUB decomposition, with the first witness found.

    Empty levels never help (an edgeless level makes every pair twins), so
    only assignments that use every level are searched.
    """
    budget = budget or OracleBudget()
    budget.check_graph(g)
    if g.num_edges == 0:
        return 0, HubAssignment(0, {})
    limit = budget.max_levels if max_k is None else min(max_k, budget.max_levels)
    for k in range(1, limit + 1):
        for h in iter_hub_decompositions(g, k, budget):
            return k, h
    raise BudgetExceeded(f"no HUB decomposition with at most {limit} levels")


def hub_from_labeling(g: BipartiteGraph, labeling: Labeling) -> tuple[HubAssignment, bool]:
    """Levels from shortest overlap lengths; returns the assignment and whether it is valid."""
    if not verify(g, labeling).ok:
        raise ValueError("labeling is not an overlap labeling of the graph")
    w = {}
    for i, j in g.iter_edges():
        w[(i, j)] = overlap_value(labeling.s_labels[i], labeling.p_labels[j])
    h = HubAssignment(labeling.length if w else 0, w)
    return h, is_hub_decomposition(g, h)


def chain_hub_degree_property(g: BipartiteGraph, h: HubAssignment) -> bool:
    """Level ``k - i`` of a HUB decomposition of ``C_{n,n}`` has maximum degree at most ``2^i``."""
    from .chain import chain_graph

    if g.ns != g.np or g.ns < 1 or g != chain_graph(g.ns):
        raise ValueError("graph is not a bipartite chain graph C_{n,n}")
    if not is_hub_decomposition(g, h):
        raise ValueError("assignment is not a HUB decomposition")
    levels = _level_masks(g, h)
    for i in range(h.k):
        s_m, p_m = levels[h.k - i]
        deg = max((m.bit_count() for m in s_m + p_m), default=0)
        if deg > 2 ** i:
            return False
    return True


# ---------------------------------------------------------------------------
# induced shapes by subset enumeration

_TEMPLATES: dict[PatternKind, tuple[int, list[tuple[int, int]]]] = {
    PatternKind.P4: (4, [(0, 1), (1, 2), (2, 3)]),
    PatternKind.C4: (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    PatternKind.C6: (6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]),
    PatternKind.DOMINO: (6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (2, 5)]),
    PatternKind.FORK: (5, [(0, 1), (1, 2), (2, 3), (1, 4)]),
}


def _global_adj(g: BipartiteGraph) -> list[set[int]]:
    adj = [set() for _ in range(g.num_vertices)]
    for i, j in g.iter_edges():
        adj[i].add(g.ns + j)
        adj[g.ns + j].add(i)
    return adj


def induced_isomorphic(adj: Sequence[set[int]], verts: Sequence[int], kind: PatternKind) -> bool:
    """Whether ``verts`` induce a copy of ``kind`` (permutation search)."""
    size, tpl = _TEMPLATES[PatternKind(kind)]
    if len(verts) != size:
        return False
    present = {(a, b) for a in range(size) for b in range(size) if verts[b] in adj[verts[a]]}
    if len(present) != 2 * len(tpl):
        return False
    want = {(a, b) for a, b in tpl} | {(b, a) for a, b in tpl}
    for perm in permutations(range(size)):
        if all((perm[a], perm[b]) in present for a, b in want):
            return True
    return False


def brute_force_pattern_sets(g: BipartiteGraph, kind: PatternKind) -> list[tuple[int, ...]]:
    """Sorted global-id vertex sets inducing ``kind``, by checking every subset."""
    adj = _global_adj(g)
    size = _TEMPLATES[PatternKind(kind)][0]
    return [c for c in combinations(range(g.num_vertices), size) if induced_isomorphic(adj, c, kind)]


# ---------------------------------------------------------------------------
# feasible matchings by enumeration


def _edges_within(g: BipartiteGraph, verts: Sequence[int]) -> list[Edge]:
    s = [v for v in verts if v < g.ns]
    p = [v - g.ns for v in verts if v >= g.ns]
    return [(i, j) for i in s for j in p if g.has_edge(i, j)]


def _degrees_after(edges: Sequence[Edge]) -> dict:
    deg: dict = {}
    for i, j in edges:
        deg[("s", i)] = deg.get(("s", i), 0) + 1
        deg[("p", j)] = deg.get(("p", j), 0) + 1
    return deg


def all_matchings(g: BipartiteGraph) -> list[frozenset[Edge]]:
    """Every matching, ordered by size and then lexicographically."""
    edges = g.sorted_edges()
    out: list[tuple[Edge, ...]] = []

    def rec(t: int, cur: list[Edge], s_used: int, p_used: int) -> None:
        out.append(tuple(cur))
        for u in range(t, len(edges)):
            i, j = edges[u]
            if s_used >> i & 1 or p_used >> j & 1:
                continue
            cur.append(edges[u])
            rec(u + 1, cur, s_used | 1 << i, p_used | 1 << j)
            cur.pop()

    rec(0, [], 0, 0)
    out.sort(key=lambda m: (len(m), m))
    return [frozenset(m) for m in out]


def feasible_matching_bruteforce(g: BipartiteGraph, budget: OracleBudget | None = None) -> frozenset[Edge] | None:
    """First feasible matching in size-then-lexicographic order, or ``None``.

    Feasibility is re-derived from scratch: the remainder graph is tested
    for P4-freeness by closing every three-edge path, and six-vertex
    subsets are classified by their degree sequences.
    """
    budget = budget or OracleBudget()
    budget.check_graph(g)
    if has_twins(g):
        raise ValueError("graph has twins; reduce it first")
    clock = _Clock(budget.time_cap)
    c6, dom = [], []
    for s3 in combinations(range(g.ns), 3):
        for p3 in combinations(range(g.np), 3):
            kind = _six_kind(g, s3, p3)
            if kind is not None:
                (c6 if kind == PatternKind.C6 else dom).append(_edges_within(g, list(s3) + [g.ns + j for j in p3]))
    for m in all_matchings(g):
        clock.tick()
        rest = list(g.s_adj)
        for i, j in m:
            rest[i] &= ~(1 << j)
        if not _closed_under_paths(rest, g.np):
            continue
        if all(_c6_split(es, m) for es in c6) and all(_domino_split(es, m) for es in dom):
            return m
    return None


def _six_kind(g: BipartiteGraph, s3: Sequence[int], p3: Sequence[int]) -> PatternKind | None:
    """C6 is the only 2-regular 3+3 graph; the domino is K_{3,3} minus two disjoint edges."""
    pm = sum(1 << j for j in p3)
    s_deg = [bin(g.s_adj[i] & pm).count("1") for i in s3]
    sm = sum(1 << i for i in s3)
    p_deg = [bin(g.p_adj[j] & sm).count("1") for j in p3]
    degs = sorted(s_deg + p_deg)
    if degs == [2] * 6:
        return PatternKind.C6
    if sorted(s_deg) == [2, 2, 3] and sorted(p_deg) == [2, 2, 3]:
        return PatternKind.DOMINO
    return None


def _closed_under_paths(s_adj: Sequence[int], np: int) -> bool:
    """No induced P4: every path ``s - p - s' - p'`` has the edge ``s p'``."""
    p_adj = [0] * np
    for i, mask in enumerate(s_adj):
        for j in _bits(mask):
            p_adj[j] |= 1 << i
    for i, mask in enumerate(s_adj):
        for j in _bits(mask):
            for t in _bits(p_adj[j]):
                if s_adj[t] & ~mask:
                    return False
    return True


def _c6_split(edges: Sequence[Edge], m: frozenset[Edge]) -> bool:
    left = [e for e in edges if e not in m]
    return len(left) == 3 and all(d == 1 for d in _degrees_after(left).values())


def _domino_split(edges: Sequence[Edge], m: frozenset[Edge]) -> bool:
    # C4 plus a disjoint edge on six vertices: 5 edges, degrees 1,1,2,2,2,2
    left = [e for e in edges if e not in m]
    return len(left) == 5 and sorted(_degrees_after(left).values()) == [1, 1, 2, 2, 2, 2] and _has_c4(left)


def _has_c4(edges: Sequence[Edge]) -> bool:
    es = set(edges)
    s = sorted({i for i, _ in edges})
    p = sorted({j for _, j in edges})
    return any(
        all((a, b) in es for a in ss for b in pp) for ss in combinations(s, 2) for pp in combinations(p, 2)
    )


# ---------------------------------------------------------------------------
# bounded labeling search


def bounded_labeling_search(
    g: BipartiteGraph, max_len: int, alphabet_size: int, budget: OracleBudget | None = None
) -> Labeling | None:
    """Exhaustively look for an overlap labeling with labels of length ``<= max_len``.

    Symbols are drawn from ``0..alphabet_size-1`` and must appear for the
    first time in increasing order along the vertex scan, which removes the
    symmetry of renaming symbols without losing any solution.
    """
    budget = budget or OracleBudget()
    budget.check_graph(g)
    if max_len > budget.max_label_length:
        raise BudgetExceeded(f"label length {max_len} > budget {budget.max_label_length}")
    if alphabet_size > budget.max_alphabet:
        raise BudgetExceeded(f"alphabet {alphabet_size} > budget {budget.max_alphabet}")
    clock = _Clock(budget.time_cap)

    # interleave sides so edge constraints are checked early
    order: list[tuple[int, int]] = []
    for t in range(max(g.ns, g.np)):
        if t < g.ns:
            order.append((0, t))
        if t < g.np:
            order.append((1, t))
    s_lab: list = [None] * g.ns
    p_lab: list = [None] * g.np

    def candidates(next_fresh: int) -> Iterator[tuple[tuple[int, ...], int]]:
        for length in range(max_len + 1):
            yield from _words(length, next_fresh, alphabet_size)

    def consistent(side: int, v: int, lab: tuple[int, ...]) -> bool:
        if side == 0:
            for j, y in enumerate(p_lab):
                if y is not None and overlaps(lab, y) != g.has_edge(v, j):
                    return False
        else:
            for i, x in enumerate(s_lab):
                if x is not None and overlaps(x, lab) != g.has_edge(i, v):
                    return False
        return True

    def rec(t: int, next_fresh: int) -> bool:
        clock.tick()
        if t == len(order):
            return True
        side, v = order[t]
        for lab, fresh_after in candidates(next_fresh):
            if consistent(side, v, lab):
                (s_lab if side == 0 else p_lab)[v] = lab
                if rec(t + 1, fresh_after):
                    return True
                (s_lab if side == 0 else p_lab)[v] = None
        return False

    if rec(0, 0):
        return Labeling(tuple(s_lab), tuple(p_lab))
    return None


def _words(length: int, next_fresh: int, alphabet: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Words whose new symbols appear in order ``next_fresh, next_fresh + 1, ...``."""
    if length == 0:
        yield (), next_fresh
        return
    for head, fresh in _words(length - 1, next_fresh, alphabet):
        for c in range(min(fresh + 1, alphabet)):
            yield head + (c,), max(fresh, c + 1)


# ---------------------------------------------------------------------------
# graph enumeration

ENUMERATION_CAP = 20


def enumerate_bipartite_graphs(ns: int, np: int, connected_only: bool = False) -> Iterator[BipartiteGraph]:
    """All graphs on ``ns + np`` labelled vertices, by increasing edge bitmask.

    Bit ``i * np + j`` of the mask is the edge ``(i, j)``.  With
    ``connected_only`` only connected twin-free graphs are produced.
    """
    if ns * np > ENUMERATION_CAP:
        raise BudgetExceeded(f"{ns}x{np} has more than 2^{ENUMERATION_CAP} edge sets")
    row = (1 << np) - 1
    for mask in range(1 << (ns * np)):
        s_adj = [(mask >> (i * np)) & row for i in range(ns)]
        if connected_only:
            if len(set(s_adj)) < ns:
                continue
        g = BipartiteGraph.from_masks(ns, np, s_adj)
        if connected_only and (len(set(g.p_adj)) < np or not is_connected(g)):
            continue
        yield g


def connected_twin_free(g: BipartiteGraph) -> bool:
    return is_connected(g) and not has_twins(g)
