"""Line-oriented text formats for graphs, labelings, grid graphs and HUB assignments.

Blank lines and lines starting with ``#`` are ignored everywhere.  Parse
errors raise :class:`FormatError` carrying the offending line number.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph_core import BipartiteGraph
from .labeling import Labeling

Edge = tuple[int, int]


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield no, stripped.split()


def _ints(tokens: list[str], no: int) -> list[int]:
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", no) from None
    if any(v < 0 for v in vals):
        raise FormatError("negative value", no)
    return vals


def _header(lines: Iterator[tuple[int, list[str]]], word: str) -> tuple[int, list[str]]:
    try:
        no, toks = next(lines)
    except StopIteration:
        raise FormatError(f"empty input, expected '{word}' header") from None
    if toks[0] != word:
        raise FormatError(f"expected '{word}' header, got {toks[0]!r}", no)
    return no, toks[1:]


def detect_kind(text: str) -> str:
    """First keyword of the first non-comment line."""
    for _, toks in _lines(text):
        return toks[0]
    raise FormatError("empty input")


# ---------------------------------------------------------------------------
# graphs


def parse_graph(text: str) -> BipartiteGraph:
    lines = _lines(text)
    no, rest = _header(lines, "bipartite")
    if len(rest) != 2:
        raise FormatError("header must be 'bipartite <ns> <np>'", no)
    ns, np_ = _ints(rest, no)
    seen: set[Edge] = set()
    for no, toks in lines:
        if toks[0] != "e" or len(toks) != 3:
            raise FormatError("expected 'e <i> <j>'", no)
        i, j = _ints(toks[1:], no)
        if i >= ns or j >= np_:
            raise FormatError(f"edge ({i}, {j}) out of range for {ns}x{np_}", no)
        if (i, j) in seen:
            raise FormatError(f"duplicate edge ({i}, {j})", no)
        seen.add((i, j))
    return BipartiteGraph(ns, np_, seen)


def format_graph(g: BipartiteGraph) -> str:
    out = [f"bipartite {g.ns} {g.np}"]
    out += [f"e {i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# labelings


def parse_labeling(text: str, g: BipartiteGraph | None = None) -> Labeling:
    """Parse a labeling; with ``g`` given, vertex sets must match exactly.

    Without ``g`` the side sizes are taken from the maximum index seen, and
    indices must still be dense.
    """
    lines = _lines(text)
    no, rest = _header(lines, "labeling")
    if rest:
        raise FormatError("header must be just 'labeling'", no)
    found: dict[str, dict[int, tuple[int, ...]]] = {"s": {}, "p": {}}
    for no, toks in lines:
        side = toks[0]
        if side not in found or len(toks) < 2:
            raise FormatError("expected 's <i> <sym>...' or 'p <j> <sym>...'", no)
        vals = _ints(toks[1:], no)
        idx, syms = vals[0], tuple(vals[1:])
        if idx in found[side]:
            raise FormatError(f"vertex {side} {idx} labeled twice", no)
        if g is not None and idx >= (g.ns if side == "s" else g.np):
            raise FormatError(f"vertex {side} {idx} not in graph", no)
        found[side][idx] = syms
    sizes = {}
    for side in "sp":
        n = (g.ns if side == "s" else g.np) if g is not None else len(found[side])
        missing = [k for k in range(n) if k not in found[side]]
        if missing or len(found[side]) != n:
            raise FormatError(f"side {side}: missing labels for vertices {missing or 'beyond range'}")
        sizes[side] = n
    return Labeling(
        tuple(found["s"][k] for k in range(sizes["s"])),
        tuple(found["p"][k] for k in range(sizes["p"])),
    )


def format_labeling(lab: Labeling) -> str:
    out = ["labeling"]
    for side, labels in (("s", lab.s_labels), ("p", lab.p_labels)):
        for k, label in enumerate(labels):
            out.append(" ".join([side, str(k), *map(str, label)]))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# grid graphs


def parse_gridgraph(text: str) -> frozenset[tuple[int, int]]:
    lines = _lines(text)
    no, rest = _header(lines, "gridgraph")
    if rest:
        raise FormatError("header must be just 'gridgraph'", no)
    cells: set[tuple[int, int]] = set()
    for no, toks in lines:
        if toks[0] != "v" or len(toks) != 3:
            raise FormatError("expected 'v <row> <col>'", no)
        cell = tuple(_ints(toks[1:], no))
        if cell in cells:
            raise FormatError(f"duplicate cell {cell}", no)
        cells.add(cell)
    return frozenset(cells)


def format_gridgraph(cells: Iterable[tuple[int, int]]) -> str:
    return "\n".join(["gridgraph"] + [f"v {r} {c}" for r, c in sorted(cells)]) + "\n"


# ---------------------------------------------------------------------------
# HUB assignments


def parse_hub(text: str, g: BipartiteGraph | None = None) -> dict[Edge, int]:
    """Parse ``w <i> <j> <level>`` lines into an edge-to-level map."""
    w: dict[Edge, int] = {}
    for no, toks in _lines(text):
        if toks[0] != "w" or len(toks) != 4:
            raise FormatError("expected 'w <i> <j> <level>'", no)
        i, j, lvl = _ints(toks[1:], no)
        if lvl < 1:
            raise FormatError("levels start at 1", no)
        if (i, j) in w:
            raise FormatError(f"edge ({i}, {j}) assigned twice", no)
        if g is not None and not g.has_edge(i, j):
            raise FormatError(f"({i}, {j}) is not an edge of the graph", no)
        w[(i, j)] = lvl
    return w


def format_hub(w: dict[Edge, int]) -> str:
    return "".join(f"w {i} {j} {lvl}\n" for (i, j), lvl in sorted(w.items()))
