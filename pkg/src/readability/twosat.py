"""2SAT by strongly connected components of the implication graph.

Literals use the DIMACS convention: variable ``v`` (1-based) is ``v`` and
its negation is ``-v``.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def _node(lit: int) -> int:
    v = abs(lit) - 1
    return 2 * v + (1 if lit < 0 else 0)


def solve(num_vars: int, clauses: Iterable[Sequence[int]]) -> list[bool] | None:
    """Return a satisfying assignment (index ``v - 1`` for variable ``v``) or ``None``.

    Deterministic: Tarjan's algorithm visits nodes in the fixed order
    ``-1, 1, -2, 2, ...``, so unconstrained variables come out false.
    """
    n = 2 * num_vars
    graph: list[list[int]] = [[] for _ in range(n)]
    for clause in clauses:
        if len(clause) != 2:
            raise ValueError(f"clause {clause!r} does not have two literals")
        a, b = clause
        for lit in (a, b):
            if lit == 0 or abs(lit) > num_vars:
                raise ValueError(f"literal {lit} out of range")
        # (a or b)  ==  (-a -> b) and (-b -> a)
        graph[_node(-a)].append(_node(b))
        graph[_node(-b)].append(_node(a))

    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0

    visit_order = []
    for v in range(num_vars):
        visit_order += [2 * v + 1, 2 * v]
    for root in visit_order:
        if index[root] != -1:
            continue
        # iterative Tarjan
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            if pos < len(graph[v]):
                work[-1] = (v, pos + 1)
                w = graph[v][pos]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1

    assignment = []
    for v in range(num_vars):
        pos, neg = comp[2 * v], comp[2 * v + 1]
        if pos == neg:
            return None
        # Tarjan emits components in reverse topological order
        assignment.append(pos < neg)
    return assignment


def satisfies(assignment: Sequence[bool], clauses: Iterable[Sequence[int]]) -> bool:
    def val(lit: int) -> bool:
        return assignment[abs(lit) - 1] == (lit > 0)

    return all(any(val(l) for l in c) for c in clauses)
