"""The map from 123-avoiding permutations to Catalan words, and back.

    sigma --rsk--> (tau1, tau2) --h--> (w1, w2) --concat--> w1 . w2^-1

h sends a two-column tableau with descent set D and j boxes in its second
column into the half-word family picked out by :func:`class_translate`, and
inside that family by matching lexicographic ranks of the "fill choices" on
both sides.

Orientation of the statistic law: for the shipped rule,

    maj(w) - maj(w^-1) == 2 * (maj(sigma^-1) - maj(sigma))

for every sigma (see :func:`statistic_orientation`). Summed over S_n(123) this
is the same polynomial identity either way round, since both sides are
invariant under q -> 1/q.
"""
from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable, Mapping

from . import permutations as perms
from . import tableaux as tab
from . import words as wd
from .permutations import Permutation
from .rsk import TableauPair, rsk, rsk_inverse
from .tableaux import Tableau
from .words import CatalanWord, FamilyKey, HalfWord

Rule = Callable[[int, int, frozenset], frozenset]


def _rule_reflected(n: int, j: int, D: frozenset) -> frozenset:
    # 01 anchors at i whenever n - i is a non-descent
    return frozenset(i for i in range(1, n) if (n - i) not in D)


def _rule_complement(n: int, j: int, D: frozenset) -> frozenset:
    return frozenset(i for i in range(1, n) if i not in D)


RULES: dict[str, Rule] = {"R1": _rule_reflected, "R2": _rule_complement}
DEFAULT_RULE = "R1"


def family_contribution(w: HalfWord) -> int:
    """What w contributes to maj(w . x^-1) - maj(x . w^-1) for any partner x.

    Descents inside the w half of the product minus descents inside the w^-1
    half of the reversed product. A descent at the junction shows up in both
    products or in neither, so it is left out.
    """
    n = len(w)
    inside = sum(wd.descent_set(w))
    mirrored = sum(n + d for d in wd.descent_set(wd.invert(w)))
    return inside - mirrored


@lru_cache(maxsize=None)
def _invariant_table(n: int, j: int) -> dict[frozenset, frozenset]:
    # Fallback rule: pair classes with families sharing (size, contribution
    # 2j - 2 maj(non-descents)), ties broken by sorted position lists.
    classes = tab.two_col_classes(n, j)
    fams = {k.patterns: v for k, v in wd.all_families(n).items() if k.j == j}
    c_full = n * (n - 1) // 2

    def cls_key(D):
        return (len(classes[D]), 2 * j - 2 * (c_full - sum(D)))

    def fam_key(P):
        return (len(fams[P]), family_contribution(fams[P][0]))

    buckets: dict[tuple, list[frozenset]] = {}
    for P in fams:
        buckets.setdefault(fam_key(P), []).append(P)
    table = {}
    for D in sorted(classes, key=lambda d: sorted(d)):
        pool = buckets.get(cls_key(D))
        if not pool:
            raise ValueError(f"no family matches class n={n} j={j} D={sorted(D)}")
        pool.sort(key=sorted)
        table[D] = pool.pop(0)
    return table


def class_translate(n: int, j: int, D, rule: str = DEFAULT_RULE) -> FamilyKey:
    D = frozenset(D)
    classes = tab.two_col_classes(n, j) if 0 <= j <= n // 2 else {}
    if D not in classes:
        raise ValueError(f"descent set {sorted(D)} is not realized by a two-column tableau with n={n}, j={j}")
    if rule == "invariant":
        P = _invariant_table(n, j)[D]
    else:
        try:
            P = RULES[rule](n, j, D)
        except KeyError:
            raise ValueError(f"unknown rule {rule!r}") from None
    if len(P) > j:
        raise ValueError(f"rule {rule} gives {len(P)} anchors for j={j}")
    return FamilyKey(n, j, P)


def _tableau_rank_key(t: Tableau) -> tuple[int, ...]:
    return tuple(tab.continuation_counts(t))


def _word_rank_key(w: HalfWord) -> tuple[int, ...]:
    return tuple(reversed(wd.segment_counts(w)))


@lru_cache(maxsize=None)
def _canonical_map(n: int, j: int, rule: str) -> tuple[dict, dict]:
    forward: dict[Tableau, HalfWord] = {}
    for D, members in tab.two_col_classes(n, j).items():
        key = class_translate(n, j, D, rule)
        fam = wd.enumerate_family(key)
        if len(fam) != len(members):
            raise ValueError(f"class/family size mismatch at n={n} j={j} D={sorted(D)}: "
                             f"{len(members)} tableaux vs {len(fam)} words")
        ts = sorted(members, key=_tableau_rank_key)
        ws = sorted(fam, key=_word_rank_key)
        forward.update(zip(ts, ws))
    backward = {w: t for t, w in forward.items()}
    return forward, backward


def halfword_map(n: int, rule: str = DEFAULT_RULE) -> dict[Tableau, HalfWord]:
    """The full tableau -> half-word table for all two-column tableaux of n boxes."""
    out: dict[Tableau, HalfWord] = {}
    for j in range(n // 2 + 1):
        out.update(_canonical_map(n, j, rule)[0])
    return out


def random_halfword_map(n: int, rng: random.Random, rule: str = DEFAULT_RULE) -> dict[Tableau, HalfWord]:
    """Like :func:`halfword_map` but with a random bijection inside each class."""
    out: dict[Tableau, HalfWord] = {}
    for j in range(n // 2 + 1):
        for D, members in tab.two_col_classes(n, j).items():
            fam = wd.enumerate_family(class_translate(n, j, D, rule))
            shuffled = list(fam)
            rng.shuffle(shuffled)
            out.update(zip(members, shuffled))
    return out


def tableau_to_halfword(t: Tableau, rule: str = DEFAULT_RULE) -> HalfWord:
    if t.num_columns > 2:
        raise ValueError(f"tableau has {t.num_columns} columns; at most 2 allowed")
    j = len(t.column(1)) if t.num_columns == 2 else 0
    return _canonical_map(t.n, j, rule)[0][t]


def halfword_to_tableau(w: HalfWord, rule: str = DEFAULT_RULE) -> Tableau:
    w = HalfWord(w.bits)
    return _canonical_map(len(w), w.ones, rule)[1][w]


def phi(p: Permutation, rule: str = DEFAULT_RULE,
        hmap: Mapping[Tableau, HalfWord] | None = None) -> CatalanWord:
    """Catalan word of a 123-avoiding permutation.

    `hmap` overrides the within-class matching (it must be a bijection on each
    class); by default the canonical rank matching is used.
    """
    if perms.lis_length(p) > 2:
        raise ValueError(f"{p} contains 123 (longest increasing subsequence {perms.lis_length(p)})")
    pair = rsk(p)
    if hmap is None:
        w1 = tableau_to_halfword(pair.first, rule)
        w2 = tableau_to_halfword(pair.second, rule)
    else:
        w1, w2 = hmap[pair.first], hmap[pair.second]
    return wd.concat_pair(w1, w2)


def phi_inverse(w: CatalanWord, rule: str = DEFAULT_RULE) -> Permutation:
    w = CatalanWord(w.bits)
    w1, w2 = wd.split_pair(w)
    return rsk_inverse(TableauPair(halfword_to_tableau(w1, rule), halfword_to_tableau(w2, rule)))


def word_statistic(w: wd.BinaryWord) -> int:
    """maj(w) - maj(w^-1)."""
    return wd.maj(w) - wd.maj(wd.invert(w))


def perm_statistic(p: Permutation) -> int:
    """2 (maj(p) - maj(p^-1))."""
    return 2 * (perms.maj(p) - perms.maj(perms.inverse(p)))


def statistic_orientation(n: int, rule: str = DEFAULT_RULE) -> int | None:
    """+1 if word_statistic(phi(p)) == perm_statistic(p) for every p in S_n(123),
    -1 if it equals -perm_statistic(p) for every p, None if neither holds uniformly
    (0 is never returned; when both hold, +1 wins)."""
    plus = minus = True
    for p in perms.enumerate_avoiding_123(n):
        a, b = word_statistic(phi(p, rule)), perm_statistic(p)
        plus &= a == b
        minus &= a == -b
        if not (plus or minus):
            return None
    return 1 if plus else -1
