from itertools import permutations as all_perms

import pytest
from hypothesis import given, strategies as st

from catalan_maj import permutations as perms
from catalan_maj import tableaux as tab
from catalan_maj.permutations import Permutation
from catalan_maj.rsk import TableauPair, rsk, rsk_inverse
from catalan_maj.tableaux import Tableau

TAU1 = Tableau(((1, 3), (2, 4), (5, 6), (7,)))
TAU2 = Tableau(((1, 3), (2, 6), (4, 7), (5,)))


def test_example_pair():
    pair = rsk(Permutation.parse("7562143"))
    assert pair.first == TAU1
    assert pair.second == TAU2
    assert rsk_inverse(TableauPair(TAU1, TAU2)) == Permutation.parse("7562143")


@pytest.mark.parametrize("n", range(1, 6))
def test_identity_and_reverse(n):
    row = Tableau((tuple(range(1, n + 1)),))
    assert rsk(Permutation.identity(n)) == TableauPair(row, row)
    assert rsk_inverse(TableauPair(row, row)) == Permutation.identity(n)
    col = Tableau(tuple((i,) for i in range(1, n + 1)))
    assert rsk(Permutation(tuple(range(n, 0, -1)))) == TableauPair(col, col)


def test_hand_insertion_321():
    col = Tableau(((1,), (2,), (3,)))
    assert rsk(Permutation.parse("321")) == TableauPair(col, col)


def test_rejects_mismatched_shapes():
    with pytest.raises(ValueError):
        TableauPair(Tableau(((1, 2),)), Tableau(((1,), (2,))))


def test_json_keys():
    pair = rsk(Permutation.parse("7562143"))
    assert pair.to_json() == {"p": {"rows": [[1, 3], [2, 4], [5, 6], [7]]},
                              "q": {"rows": [[1, 3], [2, 6], [4, 7], [5]]}}
    assert TableauPair.from_json(pair.to_json()) == pair


@pytest.mark.parametrize("n", range(1, 6))
def test_exhaustive_round_trip_is_bijective(n):
    seen = set()
    for images in all_perms(range(1, n + 1)):
        p = Permutation(images)
        pair = rsk(p)
        assert rsk_inverse(pair) == p
        seen.add(pair)
    assert len(seen) == len(set(all_perms(range(1, n + 1))))


@given(st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_properties(images):
    p = Permutation(tuple(images))
    pair = rsk(p)
    assert rsk_inverse(pair) == p
    assert rsk(perms.inverse(p)) == pair.swapped()
    assert tab.maj(pair.second) == perms.maj(p)
    assert tab.descent_set(pair.first) == perms.descent_set(perms.inverse(p))
    assert pair.first.num_columns == perms.lis_length(p)
    assert (pair.first == pair.second) == perms.is_involution(p)
