import hashlib
import subprocess
import sys

import pytest

from readability.cli import main
from readability.formats import parse_graph, parse_labeling
from readability.labeling import verify


def run(args, capsys):
    code = main([str(a) for a in args])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_chain_pipeline(tmp_path, capsys):
    g, lab = tmp_path / "c4.graph", tmp_path / "c4.labeling"
    assert run(["gen", "chain", 4, "-o", g], capsys)[0] == 0
    assert run(["label", "chain", 4, "-o", lab], capsys)[0] == 0
    code, out, _ = run(["verify", g, lab], capsys)
    assert code == 0 and out == "ok length 3\n"
    assert parse_graph(g.read_text()).num_edges == 10


def test_verify_reports_mismatch(tmp_path, capsys):
    g, lab = tmp_path / "g", tmp_path / "l"
    g.write_text("bipartite 2 2\ne 0 0\ne 1 0\ne 1 1\n")
    lab.write_text("labeling\ns 0 0\ns 1 0\np 0 0\np 1 0\n")
    code, out, _ = run(["verify", g, lab], capsys)
    assert code == 1 and out == "extra 0 1\n"


def test_decide2_f_gadget(tmp_path, capsys):
    f = tmp_path / "f.graph"
    run(["gen", "fgadget", "-o", f], capsys)
    cnf = tmp_path / "f.cnf"
    code, out, _ = run(["decide2", f, "--dimacs", cnf], capsys)
    assert code == 1 and out == "no\n"
    assert cnf.read_text().startswith("p cnf 8 ")
    assert not (tmp_path / "f.graph.labeling").exists()


def test_decide2_yes_writes_witness(tmp_path, capsys):
    g = tmp_path / "grid.graph"
    run(["gen", "grid", 2, 4, "-o", g], capsys)
    code, out, _ = run(["decide2", g], capsys)
    assert code == 0 and out == "yes\n"
    graph = parse_graph(g.read_text())
    lab = parse_labeling((tmp_path / "grid.graph.labeling").read_text(), graph)
    assert verify(graph, lab).ok and lab.length <= 2


def test_readability_grid33(tmp_path, capsys):
    cells = tmp_path / "g33.cells"
    run(["gen", "grid", 3, 3, "--cells", "-o", cells], capsys)
    code, out, _ = run(["readability", "gridgraph", cells], capsys)
    assert code == 0 and out == "3\n"
    assert run(["verify", cells, f"{cells}.labeling"], capsys)[0] == 0


def test_seq_and_totient(capsys):
    assert run(["seq", "S", 2], capsys)[1] == "2 0\n0\n0 1\n"
    assert run(["seq", "B", 3], capsys)[1] == "2\n3\n1\n3\n2\n"
    assert run(["totient", 12], capsys)[1] == "4\n"


def test_hub_commands(tmp_path, capsys):
    g = tmp_path / "c3"
    run(["gen", "chain", 3, "-o", g], capsys)
    code, out, _ = run(["hub", "min", g], capsys)
    assert code == 0 and out.startswith("k 2\n")
    a = tmp_path / "a"
    a.write_text(out.split("\n", 1)[1])
    assert run(["hub", "check", g, a], capsys)[:2] == (0, "valid k 2\n")
    a.write_text("".join(f"w {i} {j} 1\n" for i in range(3) for j in range(3) if i <= j))
    assert run(["hub", "check", g, a], capsys)[:2] == (1, "invalid\n")
    assert run(["hub", "min", g, "--max-k", 1], capsys)[0] == 3


def test_oracles(tmp_path, capsys):
    g = tmp_path / "c6"
    g.write_text("bipartite 3 3\ne 0 0\ne 0 1\ne 1 1\ne 1 2\ne 2 2\ne 2 0\n")
    code, out, _ = run(["oracle", "matching", g], capsys)
    assert code == 0 and out.startswith("matching 3\n")
    code, out, _ = run(["oracle", "label-search", g, "--len", 2, "--alphabet", 4], capsys)
    assert code == 0 and out.startswith("labeling\n")
    f = tmp_path / "f"
    run(["gen", "fgadget", "-o", f], capsys)
    assert run(["oracle", "matching", f], capsys)[:2] == (1, "none\n")
    assert run(["oracle", "label-search", g, "--len", 5, "--alphabet", 2], capsys)[0] == 3


@pytest.mark.parametrize(
    "args",
    [
        ["gen", "torus", 5, 5],
        ["gen", "chain"],
        ["seq", "S", 1],
        ["nonsense"],
        ["label", "chain", 0],
        ["verify", "/nonexistent/a", "/nonexistent/b"],
    ],
)
def test_usage_errors(args, capsys):
    assert run(args, capsys)[0] == 2


def test_format_error_reports_line(tmp_path, capsys):
    g = tmp_path / "bad"
    g.write_text("bipartite 1 1\ne 0 0\ne 0 0\n")
    code, _, err = run(["decide2", g], capsys)
    assert code == 2 and "line 3" in err


def test_byte_identical_runs(tmp_path):
    def once(name):
        out = tmp_path / name
        subprocess.run(
            [sys.executable, "-m", "readability", "label", "torus", "2", "-o", str(out)], check=True
        )
        return hashlib.sha256(out.read_bytes()).hexdigest()

    assert once("a") == once("b")
