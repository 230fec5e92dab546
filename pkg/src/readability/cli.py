"""Command-line front end.

Exit codes: 0 success or "yes", 1 decided "no", 2 usage or format error,
3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import chain, formats, grids, hub_oracle
from .graph_core import BipartiteGraph
from .labeling import verify
from .readability2 import combined_dimacs, decide_le2

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2, 3


class CommandError(Exception):
    """Invalid arguments detected after parsing."""


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}") from None


def read_graph(path: str) -> BipartiteGraph:
    """Load a ``bipartite`` or ``gridgraph`` file as a graph."""
    text = _read(path)
    if formats.detect_kind(text) == "gridgraph":
        return grids.grid_graph(formats.parse_gridgraph(text)).graph
    return formats.parse_graph(text)


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"{value} must be positive")
    return n


# ---------------------------------------------------------------------------
# verbs


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "chain":
        (n,) = _dims(args, 1)
        text = formats.format_graph(chain.chain_graph(n))
    elif args.family == "grid":
        m, n = _dims(args, 2)
        if args.cells:
            text = formats.format_gridgraph(grids.grid_cells(m, n))
        else:
            text = formats.format_graph(grids.grid(m, n))
    elif args.family == "torus":
        m, n = _dims(args, 2)
        text = formats.format_graph(grids.toroidal_grid(m, n))
    else:
        _dims(args, 0)
        if args.cells:
            text = formats.format_gridgraph(grids.f_gadget_cells())
        else:
            text = formats.format_graph(grids.f_gadget())
    _emit(text, args.output)
    return EXIT_OK


def _dims(args: argparse.Namespace, count: int) -> list[int]:
    if len(args.dims) != count:
        raise CommandError(f"gen {args.family} takes {count} size argument(s), got {len(args.dims)}")
    return args.dims


def cmd_label(args: argparse.Namespace) -> int:
    lab = chain.label_chain(args.n) if args.family == "chain" else grids.torus_labeling(args.n)
    _emit(formats.format_labeling(lab), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    lab = formats.parse_labeling(_read(args.labeling), g)
    report = verify(g, lab)
    if report.ok:
        print(f"ok length {lab.length}")
        return EXIT_OK
    for i, j in report.missing:
        print(f"missing {i} {j}")
    for i, j in report.extra:
        print(f"extra {i} {j}")
    return EXIT_NO


def cmd_decide2(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    decision = decide_le2(g)
    if args.dimacs:
        Path(args.dimacs).write_text(combined_dimacs(decision), encoding="utf-8")
    if not decision.answer:
        print("no")
        return EXIT_NO
    witness = args.witness or args.graph + ".labeling"
    Path(witness).write_text(formats.format_labeling(decision.labeling), encoding="utf-8")
    print("yes")
    return EXIT_OK


def cmd_readability(args: argparse.Namespace) -> int:
    cells = formats.parse_gridgraph(_read(args.file))
    if not cells:
        raise CommandError("grid graph has no cells")
    result = grids.grid_graph_readability(grids.GridGraphSpec(cells))
    witness = args.witness or args.file + ".labeling"
    Path(witness).write_text(formats.format_labeling(result.witness), encoding="utf-8")
    print(result.value)
    return EXIT_OK


def cmd_seq(args: argparse.Namespace) -> int:
    if args.r < 2:
        raise CommandError("r must be at least 2")
    if args.which == "S":
        lines = [" ".join(map(str, s)) for s in chain.build_S(args.r).strings]
    else:
        lines = [str(x) for x in chain.build_B(args.r).lengths]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_totient(args: argparse.Namespace) -> int:
    print(chain.totient(args.r))
    return EXIT_OK


def _budget(args: argparse.Namespace) -> hub_oracle.OracleBudget:
    return hub_oracle.OracleBudget(time_cap=args.time_cap)


def cmd_hub(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    if args.action == "min":
        k, h = hub_oracle.min_hub_bruteforce(g, _budget(args), args.max_k)
        print(f"k {k}")
        sys.stdout.write(formats.format_hub(h.w))
        return EXIT_OK
    if args.assignment is None:
        raise CommandError("hub check needs an assignment file")
    w = formats.parse_hub(_read(args.assignment), g)
    h = hub_oracle.HubAssignment(max(w.values(), default=0), w)
    if hub_oracle.is_hub_decomposition(g, h):
        print(f"valid k {h.k}")
        return EXIT_OK
    print("invalid")
    return EXIT_NO


def cmd_oracle(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    budget = _budget(args)
    if args.action == "matching":
        m = hub_oracle.feasible_matching_bruteforce(g, budget)
        if m is None:
            print("none")
            return EXIT_NO
        print(f"matching {len(m)}")
        for i, j in sorted(m):
            print(f"m {i} {j}")
        return EXIT_OK
    if args.len is None or args.alphabet is None:
        raise CommandError("label-search needs --len and --alphabet")
    lab = hub_oracle.bounded_labeling_search(g, args.len, args.alphabet, budget)
    if lab is None:
        print("none")
        return EXIT_NO
    sys.stdout.write(formats.format_labeling(lab))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="readability", description="Overlap labelings of bipartite graphs.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("family", choices=["chain", "grid", "torus", "fgadget"])
    p.add_argument("dims", nargs="*", type=_positive)
    p.add_argument("--cells", action="store_true", help="emit a gridgraph cell file (grid, fgadget)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("label", help="construct a labeling")
    p.add_argument("family", choices=["chain", "torus"])
    p.add_argument("n", type=_positive)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling against a graph")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decide2", help="decide readability at most 2")
    p.add_argument("graph")
    p.add_argument("--witness", help="witness path (default: <graph>.labeling)")
    p.add_argument("--dimacs", help="write the 2SAT formula in DIMACS CNF")
    p.set_defaults(func=cmd_decide2)

    p = sub.add_parser("readability", help="exact readability of a grid graph")
    p.add_argument("kind", choices=["gridgraph"])
    p.add_argument("file")
    p.add_argument("--witness", help="witness path (default: <file>.labeling)")
    p.set_defaults(func=cmd_readability)

    p = sub.add_parser("seq", help="print S_r or B_r")
    p.add_argument("which", choices=["S", "B"])
    p.add_argument("r", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("totient", help="Euler's phi")
    p.add_argument("r", type=_positive)
    p.set_defaults(func=cmd_totient)

    p = sub.add_parser("hub", help="HUB decompositions")
    p.add_argument("action", choices=["min", "check"])
    p.add_argument("graph")
    p.add_argument("assignment", nargs="?")
    p.add_argument("--max-k", type=_positive)
    p.add_argument("--time-cap", type=float, default=120.0)
    p.set_defaults(func=cmd_hub)

    p = sub.add_parser("oracle", help="brute-force oracles")
    p.add_argument("action", choices=["matching", "label-search"])
    p.add_argument("graph")
    p.add_argument("--len", type=_positive)
    p.add_argument("--alphabet", type=_positive)
    p.add_argument("--time-cap", type=float, default=120.0)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except hub_oracle.BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CommandError, formats.FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
