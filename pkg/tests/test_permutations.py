from itertools import permutations as all_perms

import pytest
from hypothesis import given, strategies as st

from catalan_maj import permutations as perms
from catalan_maj.permutations import Permutation

import oracles

P = Permutation.parse
perm_strategy = st.integers(1, 9).flatmap(
    lambda n: st.permutations(range(1, n + 1))).map(lambda xs: Permutation(tuple(xs)))


@pytest.mark.parametrize("text, expected", [("7562143", 14), ("5476231", 14), ("1 2 3 4", 0)])
def test_maj(text, expected):
    assert perms.maj(P(text)) == expected


@pytest.mark.parametrize("text, expected", [("7562143", "5476231"), ("1234", "1234"), ("231", "312")])
def test_inverse(text, expected):
    assert perms.inverse(P(text)) == P(expected)


def test_parse_formats():
    assert P("7 5 6 2 1 4 3") == P("7562143") == Permutation((7, 5, 6, 2, 1, 4, 3))
    assert str(P("7562143")) == "7 5 6 2 1 4 3"
    with pytest.raises(ValueError):
        P("1 1 2")
    with pytest.raises(ValueError):
        P("1 x")


@pytest.mark.parametrize("n", range(1, 8))
def test_lis_extremes(n):
    assert perms.lis_length(Permutation.identity(n)) == n
    assert perms.lis_length(Permutation(tuple(range(n, 0, -1)))) == 1


def test_lis_example():
    assert perms.lis_length(P("7562143")) == 2 == oracles.lis_bruteforce((7, 5, 6, 2, 1, 4, 3))


@pytest.mark.parametrize("n", range(1, 9))
def test_lis_against_exhaustive_subsequences(n):
    # n = 8 is 40320 perms with exponential oracle; sample the big ones
    pool = list(all_perms(range(1, n + 1)))
    if n >= 7:
        pool = pool[:: 97]
    for images in pool:
        assert perms.lis_length(Permutation(images)) == oracles.lis_bruteforce(images)


def test_S_n_i_small():
    assert perms.enumerate_S_n_i(3, 3) == [P("123")]
    assert perms.enumerate_S_n_i(3, 1) == [P("321")]
    assert [str(p) for p in perms.enumerate_S_n_i(3, 2)] == ["1 3 2", "2 1 3", "2 3 1", "3 1 2"]


@pytest.mark.parametrize("n", range(1, 8))
def test_S_n_i_partition_against_filter(n):
    every = []
    for i in range(1, n + 1):
        cls = perms.enumerate_S_n_i(n, i)
        assert all(perms.lis_length(p) == i for p in cls)
        every += cls
    assert sorted(p.images for p in every) == sorted(all_perms(range(1, n + 1)))
    assert [p.images for p in perms.enumerate_avoiding_123(n)] == oracles.perms_lis_at_most(n, 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_avoiders_counted_by_catalan(n):
    assert len(perms.enumerate_avoiding_123(n)) == oracles.catalan_recurrence(n)


def test_avoiders_small():
    assert perms.enumerate_avoiding_123(1) == [P("1")]
    assert len(perms.enumerate_avoiding_123(3)) == 5 and P("123") not in perms.enumerate_avoiding_123(3)
    assert len(perms.enumerate_avoiding_123(4)) == 14


@given(perm_strategy)
def test_inverse_involution(p):
    assert perms.inverse(perms.inverse(p)) == p
    assert perms.maj(perms.inverse(perms.inverse(p))) == perms.maj(p)
    assert perms.inverse(p).images == oracles.perm_inverse(p.images)


@given(perm_strategy)
def test_maj_matches_oracle(p):
    assert perms.maj(p) == oracles.perm_maj(p.images)
