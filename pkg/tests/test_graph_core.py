import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from readability.chain import chain_graph
from readability.graph_core import (
    BipartiteGraph,
    PatternKind,
    Side,
    VertexRef,
    connected_components,
    disjoint_union,
    enumerate_patterns,
    has_twins,
    induced_subgraph,
    is_biclique_union,
    is_connected,
    is_edgeless,
    is_p4_free,
    max_degree,
    occurrence_vertex_key,
    twin_classes,
    twin_free_reduction,
)
from readability.grids import grid
from readability.hub_oracle import brute_force_pattern_sets

P4 = BipartiteGraph(2, 2, [(0, 0), (1, 0), (1, 1)])
C6 = BipartiteGraph(3, 3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)])


def complete(a, b):
    return BipartiteGraph(a, b, [(i, j) for i in range(a) for j in range(b)])


@st.composite
def graphs(draw, max_side=4):
    ns = draw(st.integers(0, max_side))
    np_ = draw(st.integers(0, max_side))
    pairs = [(i, j) for i in range(ns) for j in range(np_)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return BipartiteGraph(ns, np_, chosen)


class TestConstruction:
    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            BipartiteGraph(1, 1, [(0, 1)])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            BipartiteGraph(1, 1, [(0, 0), (0, 0)])

    def test_from_masks_matches_edges(self):
        g = BipartiteGraph.from_masks(2, 3, [0b101, 0b010])
        assert g == BipartiteGraph(2, 3, [(0, 0), (0, 2), (1, 1)])
        assert g.p_adj == (0b01, 0b10, 0b01)

    def test_from_masks_large_transpose(self):
        g = chain_graph(300)
        assert g.p_adj[299] == (1 << 300) - 1
        assert g.p_adj[0] == 1
        assert g.num_edges == 300 * 301 // 2

    def test_basic_queries(self):
        assert P4.num_edges == 3 and P4.num_vertices == 4
        assert P4.neighbors(VertexRef(Side.P, 0)) == [0, 1]
        assert P4.degree(VertexRef(Side.S, 1)) == 2
        assert max_degree(P4) == 2
        assert is_edgeless(BipartiteGraph(3, 2))

    def test_swap_sides(self):
        assert P4.swap_sides().sorted_edges() == [(0, 0), (0, 1), (1, 1)]

    def test_induced_subgraph_order(self):
        h = induced_subgraph(C6, [2, 0], [0])
        assert h == BipartiteGraph(2, 1, [(0, 0), (1, 0)])

    def test_disjoint_union(self):
        u = disjoint_union(P4, complete(1, 1))
        assert (u.ns, u.np, u.num_edges) == (3, 3, 4)


class TestComponentsAndTwins:
    def test_two_edges(self):
        comps = connected_components(BipartiteGraph(2, 2, [(0, 0), (1, 1)]))
        assert [c.num_edges for c, _ in comps] == [1, 1]

    def test_chain_is_connected(self):
        assert len(connected_components(chain_graph(4))) == 1

    def test_isolated_only(self):
        comps = connected_components(BipartiteGraph(2, 0))
        assert len(comps) == 2 and all(c.num_vertices == 1 for c, _ in comps)

    def test_twin_examples(self):
        q = twin_classes(complete(2, 2))
        assert q.s_classes == ((0, 1),) and q.p_classes == ((0, 1),)
        assert not has_twins(chain_graph(4))
        q = twin_classes(BipartiteGraph(2, 1, [(0, 0), (1, 0)]))
        assert q.s_classes == ((0, 1),)

    def test_reductions(self):
        red, _ = twin_free_reduction(complete(3, 3))
        assert red == complete(1, 1)
        red, _ = twin_free_reduction(chain_graph(4))
        assert red == chain_graph(4)
        assert twin_free_reduction(P4)[0] == P4

    @given(graphs())
    @settings(max_examples=150, deadline=None)
    def test_reduction_is_twin_free_quotient(self, g):
        red, q = twin_free_reduction(g)
        assert not has_twins(red)
        for i in range(g.ns):
            for j in range(g.np):
                assert g.has_edge(i, j) == red.has_edge(q.s_class_of[i], q.p_class_of[j])

    @given(graphs())
    @settings(max_examples=150, deadline=None)
    def test_components_partition_vertices(self, g):
        comps = connected_components(g)
        s = sorted(i for _, m in comps for i in m.s)
        p = sorted(j for _, m in comps for j in m.p)
        assert s == list(range(g.ns)) and p == list(range(g.np))
        assert sum(c.num_edges for c, _ in comps) == g.num_edges
        assert all(is_connected(c) for c, _ in comps)


class TestP4Free:
    def test_examples(self):
        assert is_p4_free(complete(2, 3))
        assert not is_p4_free(P4)
        assert not is_p4_free(C6)

    @given(graphs())
    @settings(max_examples=200, deadline=None)
    def test_agrees_with_biclique_union(self, g):
        assert is_p4_free(g) == is_biclique_union(g)


class TestPatterns:
    def test_c6_single(self):
        occ = enumerate_patterns(C6, PatternKind.C6)
        assert len(occ) == 1 and len(occ[0].edges) == 6

    def test_domino_is_g23(self):
        g = grid(2, 3)
        (occ,) = enumerate_patterns(g, PatternKind.DOMINO)
        assert len(occ.edges) == 7
        assert enumerate_patterns(g, PatternKind.C6) == []

    def test_c4_in_k22(self):
        assert len(enumerate_patterns(complete(2, 2), PatternKind.C4)) == 1

    def test_frozen_counts_grid33(self):
        g = grid(3, 3)
        counts = {k.value: len(enumerate_patterns(g, k)) for k in PatternKind}
        assert counts == {"P4": 24, "C4": 4, "C6": 0, "Domino": 4, "Fork": 12}

    def test_edge_conventions_consecutive(self):
        g = grid(3, 3)
        for kind in PatternKind:
            for occ in enumerate_patterns(g, kind):
                for e in occ.edges:
                    assert g.has_edge(*e)
        for occ in enumerate_patterns(g, PatternKind.DOMINO):
            gid = lambda r: r.index if r.side == Side.S else g.ns + r.index  # noqa: E731
            chord = occ.edge(7)
            ends = {gid(occ.vertices[2]), gid(occ.vertices[5])}
            assert ends == {chord[0], g.ns + chord[1]}
            assert gid(occ.vertices[2]) < gid(occ.vertices[5])

    @pytest.mark.parametrize("kind", list(PatternKind))
    @given(g=graphs(max_side=4))
    @settings(max_examples=60, deadline=None)
    def test_matches_subset_oracle(self, kind, g):
        got = [occurrence_vertex_key(g, o) for o in enumerate_patterns(g, kind)]
        assert got == brute_force_pattern_sets(g, kind)

    @pytest.mark.parametrize("kind", list(PatternKind))
    def test_matches_oracle_on_grids(self, kind):
        for g in (grid(2, 4), grid(3, 3), chain_graph(4)):
            got = [occurrence_vertex_key(g, o) for o in enumerate_patterns(g, kind)]
            assert got == brute_force_pattern_sets(g, kind)
