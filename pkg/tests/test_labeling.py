import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from readability.chain import chain_graph, label_chain
from readability.graph_core import BipartiteGraph, disjoint_union, twin_free_reduction
from readability.labeling import (
    Labeling,
    biclique_labeling,
    combine_components,
    empty_labeling,
    lift_to_twins,
    overlap_matrix,
    overlap_value,
    overlaps,
    properly_overlaps,
    restrict,
    reverse,
    union_disjoint,
    verify,
    verify_naive,
)

P4 = BipartiteGraph(2, 2, [(0, 0), (1, 0), (1, 1)])
K22 = BipartiteGraph(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])

labels = st.lists(st.integers(0, 2), max_size=4).map(tuple)


def naive_overlaps(x, y):
    return any(x[len(x) - i:] == y[:i] for i in range(1, min(len(x), len(y)) + 1))


class TestOverlap:
    def test_examples(self):
        assert overlaps((0, 1), (1, 0))
        assert overlaps((2, 0), (0,))
        assert not overlaps((0,), (2, 0))
        assert overlaps((5,), (5,))

    def test_values(self):
        assert overlap_value((1, 2), (1, 2)) == 2
        assert overlap_value((0, 0), (0, 1)) == 1
        assert overlap_value((), (1,)) is None

    def test_proper(self):
        assert properly_overlaps((0, 1, 0), (0, 1, 0))
        assert not properly_overlaps((0, 1), (0, 1))

    @given(labels, labels)
    def test_against_definition(self, x, y):
        assert overlaps(x, y) == naive_overlaps(x, y)
        v = overlap_value(x, y)
        assert (v is not None) == overlaps(x, y)
        if v is not None:
            assert x[len(x) - v:] == y[:v]

    def test_labeling_rejects_negative(self):
        with pytest.raises(ValueError):
            Labeling(((-1,),), ())


class TestVerify:
    def test_single_edge(self):
        assert verify(BipartiteGraph(1, 1, [(0, 0)]), Labeling(((7,),), ((7,),))).ok

    def test_p4_all_zero_has_extra_chord(self):
        lab = Labeling(((0,), (0,)), ((0,), (0,)))
        report = verify(P4, lab)
        assert report.extra == ((0, 1),) and report.missing == ()

    def test_missing(self):
        report = verify(K22, Labeling(((0,), (1,)), ((0,), (0,))))
        assert report.missing == ((1, 0), (1, 1))

    def test_chain_c44(self):
        assert verify(chain_graph(4), label_chain(4)).ok

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            verify(P4, Labeling(((0,),), ((0,),)))

    def test_blocked_rows_agree(self):
        g, lab = chain_graph(60), label_chain(60)
        bad = Labeling(lab.s_labels[:-1] + ((9,),), lab.p_labels)
        assert verify(g, bad, block_cells=61) == verify(g, bad) == verify_naive(g, bad)

    @given(st.data())
    @settings(max_examples=150, deadline=None)
    def test_matrix_against_naive(self, data):
        s = data.draw(st.lists(labels, max_size=5))
        p = data.draw(st.lists(labels, max_size=5))
        mat = overlap_matrix(s, p)
        for i, x in enumerate(s):
            for j, y in enumerate(p):
                assert mat[i, j] == naive_overlaps(x, y)
        edges = [(i, j) for i in range(len(s)) for j in range(len(p)) if (i + j) % 2]
        g = BipartiteGraph(len(s), len(p), edges)
        assert verify(g, Labeling(s, p)) == verify_naive(g, Labeling(s, p))


class TestCombinators:
    def test_restrict(self):
        lab = label_chain(4)
        sub = restrict(lab, [1, 3], [3])
        assert sub.s_labels == (lab.s_labels[1], lab.s_labels[3])

    def test_union_and_reverse(self):
        a, b = label_chain(3), biclique_labeling(K22)
        u = union_disjoint(a, b)
        assert verify(disjoint_union(chain_graph(3), K22), u).ok
        assert verify(chain_graph(5).swap_sides(), reverse(label_chain(5))).ok

    def test_lift_k22(self):
        red, q = twin_free_reduction(K22)
        lab = lift_to_twins(K22, Labeling(((7,),), ((7,),)), q)
        assert lab.s_labels == lab.p_labels == ((7,), (7,))
        assert verify(K22, lab).ok
        assert red.ns == 1

    def test_combine_rejects_gaps(self):
        from readability.graph_core import VertexMap

        with pytest.raises(ValueError):
            combine_components(2, 1, [(Labeling(((0,),), ((0,),)), VertexMap((0,), (0,)))])


class TestBiclique:
    def test_k22(self):
        assert biclique_labeling(K22) == Labeling(((0,), (0,)), ((0,), (0,)))

    def test_edgeless(self):
        g = BipartiteGraph(2, 1)
        lab = biclique_labeling(g)
        assert lab == empty_labeling(g) and lab.length == 0

    def test_two_bicliques(self):
        g = BipartiteGraph(3, 2, [(0, 0), (1, 0), (2, 1)])
        lab = biclique_labeling(g)
        assert lab.s_labels == ((0,), (0,), (1,)) and lab.alphabet == {0, 1}
        assert verify(g, lab).ok

    def test_isolated_get_fresh(self):
        g = BipartiteGraph(2, 2, [(0, 0)])
        lab = biclique_labeling(g)
        assert lab == Labeling(((0,), (1,)), ((0,), (2,)))
        assert verify(g, lab).ok

    def test_rejects_p4(self):
        with pytest.raises(ValueError):
            biclique_labeling(P4)
