import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from readability.chain import (
    BASE_STRINGS,
    FMSequence,
    build_B,
    build_S,
    chain_graph,
    chain_lower_bound,
    chain_round,
    expand,
    is_forward_matching,
    iter_B,
    label_chain,
    totient,
    totient_direct,
    totient_summatory,
    totient_table,
)
from readability.labeling import verify


class TestChainGraph:
    def test_c44(self):
        g = chain_graph(4)
        assert g.sorted_edges() == [(i, j) for i in range(4) for j in range(4) if i <= j]

    def test_small(self):
        assert chain_graph(1).sorted_edges() == [(0, 0)]
        assert chain_graph(5).num_edges == 15

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            chain_graph(0)


class TestSequences:
    def test_expand_s2(self):
        s3 = expand(FMSequence(BASE_STRINGS, 2))
        assert s3.strings == ((2, 0), (2, 0, 0), (0,), (0, 0, 1), (0, 1))
        assert is_forward_matching(s3.strings)

    def test_forward_matching_examples(self):
        assert is_forward_matching([(2, 0), (0,), (0, 1)])
        assert not is_forward_matching([(0,), (0,)])
        assert not is_forward_matching([(0, 1, 0)])

    def test_frozen_s4_and_b(self):
        assert build_S(4).strings == ((2, 0), (2, 0, 0), (2, 0, 0, 0), (0,), (0, 0, 0, 1), (0, 0, 1), (0, 1))
        assert build_B(4).lengths == (2, 3, 4, 1, 4, 3, 2)
        assert build_B(5).lengths == (2, 5, 3, 4, 5, 1, 5, 4, 3, 5, 2)

    def test_profile_matches_strings(self):
        for b in iter_B(25):
            assert b.lengths == build_S(b.round).lengths

    def test_bad_round(self):
        with pytest.raises(ValueError):
            build_S(1)
        with pytest.raises(ValueError):
            build_B(1)


class TestTotients:
    def test_values(self):
        assert [totient(k) for k in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
        assert totient(1009) == 1008
        assert totient(1024) == 512
        assert totient_summatory(10) == 32

    @given(st.integers(1, 3000))
    def test_sieve_matches_direct(self, k):
        assert totient_table(3000)[k] == totient_direct(k)

    def test_identity(self):
        for b in iter_B(60):
            assert len(b) == totient_summatory(b.round) + 1


class TestLabelChain:
    def test_n3(self):
        lab = label_chain(3)
        assert lab.s_labels == lab.p_labels == BASE_STRINGS

    def test_n1(self):
        lab = label_chain(1)
        assert lab.s_labels == ((2, 0),)
        assert verify(chain_graph(1), lab).ok

    def test_n100_round(self):
        r = chain_round(100)
        assert totient_summatory(r - 1) + 1 < 100 <= totient_summatory(r) + 1
        assert label_chain(100).length == r == 18
        assert verify(chain_graph(100), label_chain(100)).ok

    @given(st.integers(1, 150))
    def test_verifies(self, n):
        lab = label_chain(n)
        assert verify(chain_graph(n), lab).ok
        assert lab.alphabet <= {0, 1, 2}

    def test_lower_bound(self):
        assert chain_lower_bound(5) == 2.0
        assert chain_lower_bound(1) == 1.0
        assert chain_lower_bound(13) == 3.0
        assert math.isclose(chain_lower_bound(3), math.log2(6) - 1)
