import random
from collections import Counter

import pytest

from catalan_maj import bijection as bj
from catalan_maj import permutations as perms
from catalan_maj import tableaux as tab
from catalan_maj import words as wd
from catalan_maj.permutations import Permutation
from catalan_maj.tableaux import Tableau
from catalan_maj.words import CatalanWord, FamilyKey, HalfWord

import oracles

TAU1 = Tableau(((1, 3), (2, 4), (5, 6), (7,)))
TAU2 = Tableau(((1, 3), (2, 6), (4, 7), (5,)))
SIGMA = Permutation.parse("7562143")


def test_class_translate_example():
    assert bj.class_translate(7, 3, {1, 3, 4, 6}) == FamilyKey(7, 3, frozenset({2, 5}))
    for n in range(1, 8):
        assert bj.class_translate(n, 0, set(range(1, n))) == FamilyKey(n, 0, frozenset())


def test_class_translate_rejects_unrealized():
    with pytest.raises(ValueError):
        bj.class_translate(3, 0, set())
    with pytest.raises(ValueError):
        bj.class_translate(4, 2, {1, 2, 3})


# (j, D) -> P at n = 4, matched by the cardinality oracle in tests/oracles.py
N4_TABLE = {
    (0, (1, 2, 3)): (),
    (1, (2, 3)): (3,),
    (1, (1, 3)): (2,),
    (1, (1, 2)): (1,),
    (2, (2,)): (1, 3),
    (2, (1, 3)): (2,),
}


def test_class_translate_n4():
    for (j, D), P in N4_TABLE.items():
        key = bj.class_translate(4, j, set(D))
        assert key.patterns == frozenset(P)
        members = [t for t in oracles.two_col_tableaux(4, j) if oracles.tableau_descents(t) == set(D)]
        assert len(members) == len(oracles.family(4, j, P))


@pytest.mark.parametrize("rule", ["R1", "R2", "invariant"])
@pytest.mark.parametrize("n", range(1, 10))
def test_lemma1_cardinalities(rule, n):
    for j in range(n // 2 + 1):
        for D, members in tab.two_col_classes(n, j).items():
            key = bj.class_translate(n, j, D, rule)
            assert len(wd.enumerate_family(key)) == len(members)


def test_example2_halfwords():
    assert str(bj.tableau_to_halfword(TAU1)) == "0010011"
    assert str(bj.tableau_to_halfword(TAU2)) == "0011010"
    assert bj.halfword_to_tableau(HalfWord.parse("0010011")) == TAU1
    assert bj.halfword_to_tableau(HalfWord.parse("0011010")) == TAU2


def test_small_halfwords():
    assert str(bj.tableau_to_halfword(Tableau(((1, 2),)))) == "01"
    assert bj.halfword_to_tableau(HalfWord.parse("00")) == Tableau(((1,), (2,)))


def test_rejects_three_columns():
    with pytest.raises(ValueError):
        bj.tableau_to_halfword(Tableau(((1, 2, 3),)))


@pytest.mark.parametrize("n", range(1, 9))
def test_halfword_round_trip(n):
    for w in wd.enumerate_halfwords(n):
        t = bj.halfword_to_tableau(w)
        assert bj.tableau_to_halfword(t) == w
        key = bj.class_translate(n, w.ones, tab.descent_set(t))
        assert w in wd.enumerate_family(key)


def test_phi_examples():
    assert str(bj.phi(SIGMA)) == "00100111010011"
    assert str(bj.phi(Permutation.parse("21"))) == "0011"
    assert str(bj.phi(Permutation.parse("12"))) == "0101"
    assert bj.phi_inverse(CatalanWord.parse("00100111010011")) == SIGMA
    assert bj.phi_inverse(CatalanWord.parse("0011")) == Permutation.parse("21")


def test_phi_rejects_123():
    with pytest.raises(ValueError):
        bj.phi(Permutation.parse("123"))


@pytest.mark.parametrize("n", range(1, 9))
def test_bijective_with_round_trips(n):
    images = {}
    for p in perms.enumerate_avoiding_123(n):
        w = bj.phi(p)
        assert w not in images
        images[w] = p
        assert bj.phi_inverse(w) == p
    assert set(images) == set(wd.enumerate_catalan(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_statistic_law_reversed_orientation(n):
    for p in perms.enumerate_avoiding_123(n):
        w = bj.phi(p)
        assert wd.maj(w) - wd.maj(wd.invert(w)) == 2 * (perms.maj(perms.inverse(p)) - perms.maj(p))


def test_positive_orientation_fails_with_witness():
    p = Permutation.parse("231")
    w = bj.phi(p)
    assert str(w) == "010011"
    assert bj.word_statistic(w) == -2
    assert bj.perm_statistic(p) == 2


def test_default_rule_selection():
    # R1 is the only candidate whose per-element law holds uniformly
    assert bj.DEFAULT_RULE == "R1"
    assert all(bj.statistic_orientation(n, "R1") == -1 for n in range(3, 10))
    assert bj.statistic_orientation(4, "R2") is None


@pytest.mark.parametrize("n", range(1, 9))
def test_involutions_give_self_inverse_words(n):
    for p in perms.enumerate_avoiding_123(n):
        if perms.is_involution(p):
            w = bj.phi(p)
            assert wd.invert(w) == w


@pytest.mark.parametrize("n", [6, 7])
def test_random_matchings_keep_statistics(n):
    rng = random.Random(n)
    avoiders = perms.enumerate_avoiding_123(n)
    ref = {p: bj.word_statistic(bj.phi(p)) for p in avoiders}
    for _ in range(10):
        hmap = bj.random_halfword_map(n, rng)
        got = {p: bj.word_statistic(bj.phi(p, hmap=hmap)) for p in avoiders}
        assert got == ref
        assert Counter(got.values()) == Counter(ref.values())


@pytest.mark.parametrize("n", range(1, 9))
def test_family_contribution_identification(n):
    full = set(range(1, n))
    for w in wd.enumerate_halfwords(n):
        D = tab.descent_set(bj.halfword_to_tableau(w))
        assert bj.family_contribution(w) == 2 * w.ones - 2 * sum(full - D)


def test_example1_contributions():
    assert bj.family_contribution(HalfWord.parse("0010011")) == -8
    assert bj.family_contribution(HalfWord.parse("0011010")) == -8
    assert bj.family_contribution(HalfWord.parse("0000000")) == 0
