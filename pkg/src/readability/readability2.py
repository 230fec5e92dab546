"""Deciding readability at most 2.

A twin-free bipartite graph has readability at most 2 exactly when it has
a *feasible matching* ``M``: ``G - M`` is a disjoint union of bicliques,
every induced C6 loses an alternating perfect matching, and every induced
domino keeps a C4 plus the opposite edge.  For connected twin-free graphs
of maximum degree at least 3 the existence of ``M`` is a 2SAT problem over
the edges of ``E'``; paths and cycles are handled directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import twosat
from .graph_core import (
    BipartiteGraph,
    Edge,
    PatternKind,
    PatternOccurrence,
    VertexMap,
    _adjacency_lists,
    _edge,
    connected_components,
    enumerate_patterns,
    has_twins,
    is_connected,
    is_p4_free,
    max_degree,
    twin_free_reduction,
)
from .labeling import (
    Labeling,
    biclique_labeling,
    combine_components,
    empty_labeling,
    lift_to_twins,
    overlap_value,
    verify,
)

Matching = frozenset[Edge]


def is_matching(edges: Iterable[Edge]) -> bool:
    edges = list(edges)
    return len({i for i, _ in edges}) == len(edges) == len({j for _, j in edges})


def _require_matching(g: BipartiteGraph, m: Iterable[Edge]) -> Matching:
    m = frozenset(m)
    if not is_matching(m):
        raise ValueError("edge set is not a matching")
    for i, j in m:
        if not (0 <= i < g.ns and 0 <= j < g.np and g.has_edge(i, j)):
            raise ValueError(f"({i}, {j}) is not an edge of the graph")
    return m


def _component_shape(edges: Iterable[Edge]) -> list[tuple[int, int]]:
    """Sorted ``(vertex count, edge count)`` of each component spanned by ``edges``."""
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = list(edges)
    for i, j in edges:
        for v in ((0, i), (1, j)):
            parent.setdefault(v, v)
        a, b = find((0, i)), find((1, j))
        if a != b:
            parent[a] = b
    verts: dict = {}
    edges_of: dict = {}
    for v in parent:
        r = find(v)
        verts[r] = verts.get(r, 0) + 1
    for i, _ in edges:
        r = find((0, i))
        edges_of[r] = edges_of.get(r, 0) + 1
    return sorted((verts[r], edges_of.get(r, 0)) for r in verts)


THREE_EDGES = [(2, 1), (2, 1), (2, 1)]
C4_PLUS_EDGE = [(2, 1), (4, 4)]


def is_feasible_matching(g: BipartiteGraph, m: Iterable[Edge]) -> bool:
    """Check the three feasibility conditions for ``m`` in twin-free ``g``."""
    if has_twins(g):
        raise ValueError("graph has twins; reduce it first")
    m = _require_matching(g, m)
    if not is_p4_free(g.without_edges(m)):
        return False
    for occ in enumerate_patterns(g, PatternKind.C6):
        rest = [e for e in occ.edges if e not in m]
        if _component_shape(rest) != THREE_EDGES:
            return False
    for occ in enumerate_patterns(g, PatternKind.DOMINO):
        rest = [e for e in occ.edges if e not in m]
        if _component_shape(rest) != C4_PLUS_EDGE:
            return False
    return True


# ---------------------------------------------------------------------------
# the 2SAT encoding


def compute_E_prime(g: BipartiteGraph, check_twins: bool = True) -> frozenset[Edge]:
    """Edges near a vertex of degree >= 3, or lying on an induced C6.

    The set itself is well defined with twins present; ``check_twins=False``
    skips that precondition (the decider always passes reduced graphs).
    """
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if check_twins and has_twins(g):
        raise ValueError("graph must be twin-free")
    if max_degree(g) < 3:
        raise ValueError("graph must have maximum degree at least 3")
    adj = _adjacency_lists(g)
    big = [len(a) >= 3 for a in adj]
    near_big = [big[v] or any(big[w] for w in adj[v]) for v in range(len(adj))]
    out = set()
    for i, j in g.iter_edges():
        if near_big[i] or near_big[g.ns + j]:
            out.add((i, j))
    for occ in enumerate_patterns(g, PatternKind.C6):
        out.update(occ.edges)
    return frozenset(out)


@dataclass(frozen=True)
class Clause:
    literals: tuple[int, int]
    rule: int
    source: PatternOccurrence | None = None


@dataclass(frozen=True)
class TwoSatFormula:
    """Variable ``k`` (1-based) stands for ``variables[k - 1]`` being in the matching."""

    variables: tuple[Edge, ...]
    clauses: tuple[Clause, ...]
    var_of: dict = field(compare=False, repr=False, default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "var_of", {e: k + 1 for k, e in enumerate(self.variables)})
        for c in self.clauses:
            if c.rule not in (1, 2, 3, 4, 5):
                raise ValueError(f"bad clause rule {c.rule}")
            for lit in c.literals:
                if lit == 0 or abs(lit) > len(self.variables):
                    raise ValueError(f"literal {lit} references no variable")

    def to_dimacs(self, offset: int = 0, header: bool = True) -> str:
        lines = []
        if header:
            lines.append(f"p cnf {len(self.variables)} {len(self.clauses)}")
        for c in self.clauses:
            a, b = (l + offset if l > 0 else l - offset for l in c.literals)
            lines.append(f"{a} {b} 0")
        return "".join(line + "\n" for line in lines)


def build_formula(g: BipartiteGraph, e_prime: Iterable[Edge]) -> TwoSatFormula:
    """The five clause families, in a fixed order.

    1. at most one chosen edge at each vertex (pairs inside ``E'``);
    2. each induced C4: both edges of a perfect matching, or neither;
    3. each induced C6: exactly one of the two alternating matchings;
    4. each induced domino: ``e2 or e3`` and ``e5 or e6``;
    5. each induced fork: ``e2 or e3``.
    """
    variables = tuple(sorted(e_prime))
    var = {e: k + 1 for k, e in enumerate(variables)}
    clauses: list[Clause] = []

    def x(e: Edge) -> int:
        if e not in var:
            raise AssertionError(f"pattern edge {e} outside E'")
        return var[e]

    def iff(a: Edge, b: Edge, rule: int, occ: PatternOccurrence) -> None:
        clauses.append(Clause((-x(a), x(b)), rule, occ))
        clauses.append(Clause((-x(b), x(a)), rule, occ))

    by_s: dict[int, list[Edge]] = {}
    by_p: dict[int, list[Edge]] = {}
    for e in variables:
        by_s.setdefault(e[0], []).append(e)
        by_p.setdefault(e[1], []).append(e)
    pairs = set()
    for group in list(by_s.values()) + list(by_p.values()):
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                pairs.add((group[a], group[b]))
    for e, f in sorted(pairs):
        clauses.append(Clause((-x(e), -x(f)), 1))

    for occ in enumerate_patterns(g, PatternKind.C4):
        iff(occ.edge(1), occ.edge(3), 2, occ)
        iff(occ.edge(2), occ.edge(4), 2, occ)
    for occ in enumerate_patterns(g, PatternKind.C6):
        e = occ.edge
        clauses.append(Clause((x(e(1)), x(e(2))), 3, occ))
        iff(e(1), e(3), 3, occ)
        iff(e(3), e(5), 3, occ)
        iff(e(2), e(4), 3, occ)
        iff(e(4), e(6), 3, occ)
    for occ in enumerate_patterns(g, PatternKind.DOMINO):
        e = occ.edge
        clauses.append(Clause((x(e(2)), x(e(3))), 4, occ))
        clauses.append(Clause((x(e(5)), x(e(6))), 4, occ))
    for occ in enumerate_patterns(g, PatternKind.FORK):
        e = occ.edge
        clauses.append(Clause((x(e(2)), x(e(3))), 5, occ))
    return TwoSatFormula(variables, tuple(clauses))


def solve_2sat(f: TwoSatFormula) -> dict[Edge, bool] | None:
    assignment = twosat.solve(len(f.variables), [c.literals for c in f.clauses])
    if assignment is None:
        return None
    return dict(zip(f.variables, assignment))


def extract_matching(g: BipartiteGraph, e_prime: Iterable[Edge], assignment: dict[Edge, bool]) -> Matching:
    """True edges of ``E'``, greedily extended by middle edges of untouched induced P4s.

    The induced P4s are scanned in sorted vertex order, repeatedly, until
    no P4 is left without a matching edge.
    """
    e_prime = frozenset(e_prime)
    m = {e for e, val in assignment.items() if val and e in e_prime}
    p4s = enumerate_patterns(g, PatternKind.P4)
    changed = True
    while changed:
        changed = False
        for occ in p4s:
            if not any(e in m for e in occ.edges):
                m.add(occ.edge(2))
                changed = True
    return frozenset(m)


# ---------------------------------------------------------------------------
# labels from a feasible matching


def labeling_from_matching(g: BipartiteGraph, m: Iterable[Edge], check: bool = True) -> Labeling:
    """Length-2 labeling built from a feasible matching.

    Biclique ``k`` of ``G - M`` gets symbol ``k``.  A matched pair ``(u, v)``
    with ``u`` in biclique ``i`` and ``v`` in biclique ``j`` gets ``[j, i]`` on
    both ends.  Every other vertex keeps its biclique symbol and is padded
    with a fresh symbol: in front on the ``S`` side, behind on the ``P``
    side, so the overlapping end is unchanged.
    """
    m = _require_matching(g, m)
    if check and not is_feasible_matching(g, m):
        raise ValueError("matching is not feasible")
    rest = g.without_edges(m)
    s_comp = [0] * g.ns
    p_comp = [0] * g.np
    for k, (_, vmap) in enumerate(connected_components(rest)):
        for i in vmap.s:
            s_comp[i] = k
        for j in vmap.p:
            p_comp[j] = k
    fresh = len(connected_components(rest))
    s_lab: list[tuple[int, ...] | None] = [None] * g.ns
    p_lab: list[tuple[int, ...] | None] = [None] * g.np
    for i, j in sorted(m):
        lab = (p_comp[j], s_comp[i])
        s_lab[i] = lab
        p_lab[j] = lab
    for i in range(g.ns):
        if s_lab[i] is None:
            s_lab[i] = (fresh, s_comp[i])
            fresh += 1
    for j in range(g.np):
        if p_lab[j] is None:
            p_lab[j] = (p_comp[j], fresh)
            fresh += 1
    return Labeling(tuple(s_lab), tuple(p_lab))  # type: ignore[arg-type]


def matching_from_labeling(g: BipartiteGraph, labeling: Labeling) -> Matching:
    """Edges whose shortest overlap has length 2."""
    return frozenset(
        (i, j) for i, j in g.iter_edges() if overlap_value(labeling.s_labels[i], labeling.p_labels[j]) == 2
    )


def alternating_matching(g: BipartiteGraph) -> Matching:
    """Every other edge along a connected path or cycle, starting at an end if there is one."""
    if max_degree(g) > 2 or not is_connected(g):
        raise ValueError("need a connected graph of maximum degree at most 2")
    adj = _adjacency_lists(g)
    if not any(adj):
        return frozenset()
    ends = [v for v, a in enumerate(adj) if len(a) == 1]
    start = ends[0] if ends else 0
    walk = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt or (nxt[0] == start):
            break
        prev, cur = cur, nxt[0]
        walk.append(cur)
    steps = [(walk[t], walk[t + 1]) for t in range(len(walk) - 1)]
    if not ends:
        steps.append((walk[-1], walk[0]))
    return frozenset(_edge(g, a, b) for k, (a, b) in enumerate(steps) if k % 2 == 0)


# ---------------------------------------------------------------------------
# the decision pipeline


@dataclass(frozen=True)
class ComponentDecision:
    """Outcome for one connected component (after twin reduction).

    ``route`` is one of ``"edgeless"``, ``"biclique"``, ``"max-degree-2"``
    or ``"2sat"``.
    """

    vertices: VertexMap
    reduced: BipartiteGraph
    route: str
    answer: bool
    matching: Matching | None = None
    formula: TwoSatFormula | None = None
    labeling: Labeling | None = None


@dataclass(frozen=True)
class Decision2:
    answer: bool
    labeling: Labeling | None
    components: tuple[ComponentDecision, ...]

    @property
    def failed(self) -> ComponentDecision | None:
        return next((c for c in self.components if not c.answer), None)

    @property
    def certificate(self) -> TwoSatFormula | None:
        bad = self.failed
        return bad.formula if bad else None

    def formulas(self) -> list[TwoSatFormula]:
        return [c.formula for c in self.components if c.formula is not None]


def _decide_reduced(tf: BipartiteGraph) -> tuple[str, bool, Matching | None, TwoSatFormula | None, Labeling | None]:
    if tf.num_edges == 0:
        return "edgeless", True, None, None, empty_labeling(tf)
    if is_p4_free(tf):
        return "biclique", True, frozenset(), None, biclique_labeling(tf)
    if max_degree(tf) <= 2:
        m = alternating_matching(tf)
        return "max-degree-2", True, m, None, labeling_from_matching(tf, m)
    e_prime = compute_E_prime(tf)
    formula = build_formula(tf, e_prime)
    assignment = solve_2sat(formula)
    if assignment is None:
        return "2sat", False, None, formula, None
    m = extract_matching(tf, e_prime, assignment)
    return "2sat", True, m, formula, labeling_from_matching(tf, m)


def decide_le2(g: BipartiteGraph) -> Decision2:
    """Decide whether ``g`` has readability at most 2.

    Works component by component on the twin-free reduction.  On a yes
    answer the returned labeling is for ``g`` itself (twins copy labels,
    components use disjoint symbol ranges) and has been verified.
    """
    results = []
    parts = []
    for comp, vmap in connected_components(g):
        tf, quotient = twin_free_reduction(comp)
        route, ok, m, formula, lab = _decide_reduced(tf)
        results.append(ComponentDecision(vmap, tf, route, ok, m, formula, lab))
        if not ok:
            return Decision2(False, None, tuple(results))
        parts.append((lift_to_twins(comp, lab, quotient), vmap))
    labeling = combine_components(g.ns, g.np, parts)
    report = verify(g, labeling)
    if not report.ok or labeling.length > 2:
        raise AssertionError(f"constructed witness fails verification: {report}")
    return Decision2(True, labeling, tuple(results))


def combined_dimacs(decision: Decision2) -> str:
    """All 2SAT formulas of a decision as one CNF over disjoint variable ranges."""
    formulas = decision.formulas()
    nvars = sum(len(f.variables) for f in formulas)
    nclauses = sum(len(f.clauses) for f in formulas)
    out = [f"p cnf {nvars} {nclauses}\n"]
    offset = 0
    for f in formulas:
        out.append(f.to_dimacs(offset, header=False))
        offset += len(f.variables)
    return "".join(out)
