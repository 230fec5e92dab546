import pytest
from hypothesis import given
from hypothesis import strategies as st

from readability.chain import chain_graph, label_chain
from readability.formats import (
    FormatError,
    detect_kind,
    format_graph,
    format_gridgraph,
    format_hub,
    format_labeling,
    parse_graph,
    parse_gridgraph,
    parse_hub,
    parse_labeling,
)
from readability.graph_core import BipartiteGraph
from readability.labeling import Labeling


def test_graph_round_trip():
    g = chain_graph(4)
    assert parse_graph(format_graph(g)) == g


def test_graph_comments_and_blank_lines():
    g = parse_graph("# c\nbipartite 2 1\n\ne 0 0\n  # more\ne 1 0\n")
    assert g.sorted_edges() == [(0, 0), (1, 0)]


@pytest.mark.parametrize(
    "text,line",
    [
        ("bipartite 1 1\ne 0 0\ne 0 0\n", 3),
        ("bipartite 1 1\ne 0 1\n", 2),
        ("bipartite 1\n", 1),
        ("graph 1 1\n", 1),
        ("bipartite 1 1\nx 0 0\n", 2),
        ("bipartite 1 1\ne a 0\n", 2),
    ],
)
def test_graph_errors_name_line(text, line):
    with pytest.raises(FormatError) as err:
        parse_graph(text)
    assert err.value.line == line and f"line {line}" in str(err.value)


def test_labeling_round_trip_with_empty_labels():
    lab = Labeling(((), (1, 2)), ((3,),))
    text = format_labeling(lab)
    assert text == "labeling\ns 0\ns 1 1 2\np 0 3\n"
    assert parse_labeling(text) == lab
    assert parse_labeling(text, BipartiteGraph(2, 1)) == lab


def test_labeling_must_cover_graph():
    with pytest.raises(FormatError):
        parse_labeling("labeling\ns 0 1\n", BipartiteGraph(1, 1))
    with pytest.raises(FormatError):
        parse_labeling("labeling\ns 0 1\ns 0 2\np 0 1\n")
    with pytest.raises(FormatError):
        parse_labeling("labeling\ns 1 1\np 0 1\n")
    with pytest.raises(FormatError):
        parse_labeling("labeling\ns 0 1\ns 1 1\np 0 1\n", BipartiteGraph(1, 1))


def test_chain_labeling_round_trip():
    lab = label_chain(30)
    assert parse_labeling(format_labeling(lab), chain_graph(30)) == lab


@given(st.frozensets(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=20))
def test_gridgraph_round_trip(cells):
    assert parse_gridgraph(format_gridgraph(cells)) == cells


def test_gridgraph_duplicates():
    with pytest.raises(FormatError):
        parse_gridgraph("gridgraph\nv 0 0\nv 0 0\n")


def test_hub_round_trip():
    w = {(0, 0): 1, (1, 0): 2}
    assert parse_hub(format_hub(w)) == w
    with pytest.raises(FormatError):
        parse_hub("w 0 0 0\n")
    with pytest.raises(FormatError):
        parse_hub("w 0 1 1\n", BipartiteGraph(1, 2, [(0, 0)]))


def test_detect_kind():
    assert detect_kind("# x\ngridgraph\n") == "gridgraph"
    with pytest.raises(FormatError):
        detect_kind("# only comments\n")
