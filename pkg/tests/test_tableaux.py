import pytest
from hypothesis import given, strategies as st

from catalan_maj import tableaux as tab
from catalan_maj import words as wd
from catalan_maj.tableaux import Tableau, TwoColClass

import oracles

TAU1 = Tableau(((1, 3), (2, 4), (5, 6), (7,)))
TAU2 = Tableau(((1, 3), (2, 6), (4, 7), (5,)))


def test_example_descents():
    assert tab.descent_set(TAU1) == {1, 3, 4, 6}
    assert tab.descent_set(TAU2) == {1, 3, 4, 6}
    assert tab.maj(TAU1) == 14


@pytest.mark.parametrize("n", range(1, 8))
def test_single_row_and_column(n):
    row = Tableau((tuple(range(1, n + 1)),))
    col = Tableau(tuple((i,) for i in range(1, n + 1)))
    assert tab.descent_set(row) == set() and tab.maj(row) == 0
    assert tab.descent_set(col) == set(range(1, n))
    assert tab.maj(col) == n * (n - 1) // 2


def test_invalid_tableaux():
    for rows in [((1, 2), (2,)), ((2, 1),), ((1,), (2, 3)), ((1, 3), (2,), (4, 5)), ((2, 3), (1, 4))]:
        with pytest.raises(ValueError):
            Tableau(rows)


def test_T_D_example():
    got = tab.enumerate_T_D(TwoColClass(7, 3, frozenset({1, 3, 4, 6})))
    assert set(got) == {TAU1, TAU2}
    assert tab.enumerate_T_D(TwoColClass(3, 0, frozenset())) == []
    assert tab.enumerate_T_D(TwoColClass(3, 0, frozenset({1, 2}))) == [Tableau(((1,), (2,), (3,)))]
    assert tab.enumerate_T_D(TwoColClass(4, 2, frozenset({1, 3}))) == [Tableau(((1, 3), (2, 4)))]


def test_two_col_members_never_exceed_two_columns():
    # one row of three boxes has three columns, so it is not in any two-column class
    assert all(t.num_columns <= 2 for j in range(2) for t in tab.enumerate_two_col(3, j))


@pytest.mark.parametrize("n", range(1, 11))
def test_two_col_against_oracle(n):
    for j in range(n // 2 + 1):
        got = [t.rows for t in tab.enumerate_two_col(n, j)]
        assert sorted(got) == sorted(oracles.two_col_tableaux(n, j))
        assert len(got) == len(wd.enumerate_halfwords(n, j))
        for t in tab.enumerate_two_col(n, j):
            assert len(t.column(1)) == j
            assert tab.descent_set(t) == oracles.tableau_descents(t.rows)


def test_two_col_counts():
    assert [t.rows for t in tab.enumerate_two_col(2, 1)] == [((1, 2),)]
    assert len(tab.enumerate_two_col(4, 2)) == 2
    assert len(tab.enumerate_two_col(7, 3)) == len(wd.enumerate_halfwords(7, 3)) == 14


@pytest.mark.parametrize("n", range(1, 11))
def test_each_tableau_in_exactly_one_class(n):
    for j in range(n // 2 + 1):
        classes = tab.two_col_classes(n, j)
        flat = [t for ts in classes.values() for t in ts]
        assert sorted(t.rows for t in flat) == sorted(t.rows for t in tab.enumerate_two_col(n, j))
        for D, ts in classes.items():
            assert ts == tab.enumerate_T_D(TwoColClass(n, j, D))


def test_continuation_counts_example():
    assert tab.continuation_counts(TAU1) == [1, 0]
    assert tab.continuation_counts(TAU2) == [0, 1]


def test_json_round_trip():
    assert TAU1.to_json() == {"rows": [[1, 3], [2, 4], [5, 6], [7]]}
    assert Tableau.from_json('{"rows":[[1,3],[2,4],[5,6],[7]]}') == TAU1


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n // 2))))
def test_non_descents_are_left_to_right_steps(nj):
    n, j = nj
    for t in tab.enumerate_two_col(n, j):
        bits = tab.second_column_word(t)
        ascents = {i for i in range(1, n) if bits[i - 1] == 0 and bits[i] == 1}
        assert tab.descent_set(t) == set(range(1, n)) - ascents
