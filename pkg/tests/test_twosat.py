from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from readability.twosat import satisfies, solve


def brute(n, clauses):
    return any(satisfies(list(bits), clauses) for bits in product([False, True], repeat=n))


def test_empty_formula_all_false():
    assert solve(3, []) == [False, False, False]


def test_contradiction():
    assert solve(1, [(1, 1), (-1, -1)]) is None


def test_implication_chain():
    a = solve(3, [(1, 1), (-1, 2), (-2, 3)])
    assert a == [True, True, True]


def test_rejects_bad_literals():
    import pytest

    with pytest.raises(ValueError):
        solve(1, [(1, 2)])
    with pytest.raises(ValueError):
        solve(1, [(1,)])


clause = st.tuples(
    st.integers(1, 5).flatmap(lambda v: st.sampled_from([v, -v])),
    st.integers(1, 5).flatmap(lambda v: st.sampled_from([v, -v])),
)


@given(st.lists(clause, max_size=14))
@settings(max_examples=400, deadline=None)
def test_agrees_with_truth_tables(clauses):
    a = solve(5, clauses)
    assert (a is not None) == brute(5, clauses)
    if a is not None:
        assert satisfies(a, clauses)


@given(st.lists(clause, max_size=10))
def test_deterministic(clauses):
    assert solve(5, clauses) == solve(5, list(clauses))
