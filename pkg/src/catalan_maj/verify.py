"""Brute-force verification checks, one report per (check, parameters).

Every check enumerates its objects completely; a failing report always
carries the first counterexample found, in enumeration order.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from . import bijection as bj
from . import permutations as perms
from . import qseries as qs
from . import tableaux as tab
from . import words as wd
from .permutations import Permutation
from .qseries import DivisibilityError, LaurentPoly

PASS, FAIL, DIVISIBILITY = "pass", "fail", "divisibility_failure"


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    status: str
    witness: Any = None
    counts: dict[str, int] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0

    def __post_init__(self) -> None:
        if self.status != PASS and self.witness is None:
            raise ValueError(f"{self.check}: a {self.status} report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, timing: bool = False) -> dict:
        out = {"check": self.check, "params": self.params, "status": self.status,
               "witness": self.witness, "counts": self.counts, "details": self.details}
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out


def _poly_diff(lhs: LaurentPoly, rhs: LaurentPoly) -> dict:
    diff = lhs - rhs
    return {"lhs": lhs.to_json(), "rhs": rhs.to_json(), "lhs_minus_rhs": diff.to_json()}


def _report(check, params, status, witness=None, counts=None, details=None, t0=None):
    return VerificationReport(check, params, status, witness, counts or {}, details or {},
                              time.perf_counter() - t0 if t0 is not None else 0.0)


def check_theorem(n: int) -> VerificationReport:
    t0 = time.perf_counter()
    lhs, rhs = qs.theorem_lhs(n), qs.theorem_rhs(n)
    ok = lhs == rhs
    counts = {"words": lhs.coefficient_sum(), "permutations": rhs.coefficient_sum()}
    details = {"lhs": str(lhs), "rhs": str(rhs)}
    return _report("theorem", {"n": n}, PASS if ok else FAIL,
                   None if ok else _poly_diff(lhs, rhs), counts, details, t0)


def check_lemma1(n: int, rule: str = bj.DEFAULT_RULE) -> VerificationReport:
    """|T_D| == |family(class_translate(D))| and the families partition the half-words."""
    t0 = time.perf_counter()
    n_classes = 0
    for j in range(n // 2 + 1):
        seen: set[wd.HalfWord] = set()
        for D, members in sorted(tab.two_col_classes(n, j).items(), key=lambda kv: sorted(kv[0])):
            n_classes += 1
            key = bj.class_translate(n, j, D, rule)
            fam = wd.enumerate_family(key)
            if len(fam) != len(members):
                return _report("lemma1", {"n": n, "rule": rule}, FAIL,
                               {"j": j, "D": sorted(D), "family": key.to_json(),
                                "tableaux": len(members), "words": len(fam)}, t0=t0)
            if seen & set(fam):
                return _report("lemma1", {"n": n, "rule": rule}, FAIL,
                               {"j": j, "D": sorted(D), "reason": "families overlap",
                                "family": key.to_json()}, t0=t0)
            seen |= set(fam)
        everything = set(wd.enumerate_halfwords(n, j))
        if seen != everything:
            missing = sorted(everything - seen)
            return _report("lemma1", {"n": n, "rule": rule}, FAIL,
                           {"j": j, "reason": "families do not cover all half-words",
                            "uncovered": str(missing[0])}, t0=t0)
    return _report("lemma1", {"n": n, "rule": rule}, PASS,
                   counts={"classes": n_classes, "halfwords": len(wd.enumerate_halfwords(n))}, t0=t0)


def _pair_difference(w1: wd.HalfWord, w3: wd.HalfWord) -> int:
    return bj.word_statistic(wd.concat_pair(w1, w3))


def check_lemma2(n: int) -> VerificationReport:
    """Swapping w1 for another member of its family never changes maj(w1 w3^-1) - maj(w3 w1^-1)."""
    t0 = time.perf_counter()
    comparisons = 0
    families = wd.all_families(n)
    for key, members in families.items():
        partners = wd.enumerate_halfwords(n, key.j)
        if len(members) < 2:
            continue
        base = members[0]
        for w3 in partners:
            ref = _pair_difference(base, w3)
            for other in members[1:]:
                comparisons += 1
                got = _pair_difference(other, w3)
                if got != ref:
                    return _report("lemma2", {"n": n}, FAIL,
                                   {"family": key.to_json(), "w1": str(base), "w2": str(other),
                                    "w3": str(w3), "differences": [ref, got]}, t0=t0)
    return _report("lemma2", {"n": n}, PASS,
                   counts={"families": len(families), "comparisons": comparisons}, t0=t0)


def check_lemma3(n: int, rule: str = bj.DEFAULT_RULE) -> VerificationReport:
    """Family contribution vs 2j - 2 maj(S) for S the matched descent set or its complement."""
    t0 = time.perf_counter()
    full = set(range(1, n))
    inverse_table: dict[tuple[int, frozenset], frozenset] = {}
    for j in range(n // 2 + 1):
        for D in tab.two_col_classes(n, j):
            inverse_table[(j, bj.class_translate(n, j, D, rule).patterns)] = D
    holds = {"matched": True, "complement": True}
    first_miss: dict[str, dict] = {}
    rows = []
    for key, members in wd.all_families(n).items():
        j = key.j
        partners = wd.enumerate_halfwords(n, j)
        # the full difference must split as c(w) - c(x) for every partner x
        values = {_pair_difference(w, x) + bj.family_contribution(x) for w in members for x in partners}
        contributions = {bj.family_contribution(w) for w in members}
        if len(values) != 1 or contributions != values:
            return _report("lemma3", {"n": n, "rule": rule}, FAIL,
                           {"family": key.to_json(), "reason": "contribution not constant",
                            "values": sorted(values | contributions)}, t0=t0)
        c = values.pop()
        D = inverse_table[(j, key.patterns)]
        cand = {"matched": 2 * j - 2 * sum(D), "complement": 2 * j - 2 * sum(full - D)}
        rows.append({"family": key.to_json(), "D": sorted(D), "contribution": c, **cand})
        for name, value in cand.items():
            if value != c and holds[name]:
                holds[name] = False
                first_miss[name] = {"family": key.to_json(), "D": sorted(D),
                                    "contribution": c, "predicted": value}
    passing = [k for k, v in holds.items() if v]
    details = {"identifications_holding": passing, "first_miss": first_miss}
    if not passing:
        return _report("lemma3", {"n": n, "rule": rule}, FAIL, first_miss,
                       {"families": len(rows)}, details, t0)
    return _report("lemma3", {"n": n, "rule": rule}, PASS, None, {"families": len(rows)}, details, t0)


def check_conjecture1(n: int, k: int, variant: str = qs.SHIPPED_VARIANT) -> VerificationReport:
    """F_{n,k}(q,q) == H_{n,k}(q,q). k <= 2 is proven, k >= 3 is exploratory."""
    t0 = time.perf_counter()
    params = {"n": n, "k": k, "variant": variant}
    details: dict[str, Any] = {"proven_case": k <= 2}
    h = qs.H_nk(n, k)
    bad = qs.nondivisible_compositions(n, k, variant)
    details["nondivisible_compositions"] = [list(a) for a in bad]
    if bad and k <= 2:
        return _report("conjecture1", params, DIVISIBILITY,
                       {"composition": list(bad[0])}, details=details, t0=t0)
    try:
        f = qs.F_nk(n, k, variant, strict=not bad)
    except DivisibilityError as exc:
        return _report("conjecture1", params, DIVISIBILITY,
                       {"composition": list(exc.composition) if exc.composition else None,
                        "message": str(exc)}, details=details, t0=t0)
    details["combined_division"] = bool(bad)
    details["F"] = str(f)
    details["H"] = str(h)
    counts = {"permutations": h.coefficient_sum(),
              "compositions": len(qs.F_terms(n, k, variant))}
    if f == h:
        return _report("conjecture1", params, PASS, None, counts, details, t0)
    return _report("conjecture1", params, FAIL, _poly_diff(f, h), counts, details, t0)


def check_bijection(n: int, rule: str = bj.DEFAULT_RULE) -> VerificationReport:
    """Bijectivity onto CW_n, both round trips, the per-element maj law, involutions.

    The law is checked as maj(w) - maj(w^-1) == s * 2 (maj p - maj p^-1) with one
    sign s for every p; s is reported (it comes out -1 for the shipped rule).
    """
    t0 = time.perf_counter()
    params = {"n": n, "rule": rule}
    avoiders = perms.enumerate_avoiding_123(n)
    catalan = wd.enumerate_catalan(n)
    image: dict[wd.CatalanWord, Permutation] = {}
    plus = minus = True
    plus_witness = minus_witness = None
    involutions = 0
    for p in avoiders:
        w = bj.phi(p, rule)
        if w in image:
            return _report("bijection", params, FAIL,
                           {"reason": "not injective", "perms": [str(image[w]), str(p)], "word": str(w)}, t0=t0)
        image[w] = p
        back = bj.phi_inverse(w, rule)
        if back != p:
            return _report("bijection", params, FAIL,
                           {"reason": "phi_inverse(phi(p)) != p", "perm": str(p), "word": str(w),
                            "returned": str(back)}, t0=t0)
        a, b = bj.word_statistic(w), bj.perm_statistic(p)
        if a != b and plus:
            plus, plus_witness = False, {"perm": str(p), "word": str(w), "word_stat": a, "perm_stat": b}
        if a != -b and minus:
            minus, minus_witness = False, {"perm": str(p), "word": str(w), "word_stat": a, "perm_stat": b}
        if not (plus or minus):
            return _report("bijection", params, FAIL,
                           {"reason": "maj law holds in neither orientation",
                            "plus": plus_witness, "minus": minus_witness}, t0=t0)
        if perms.is_involution(p):
            involutions += 1
            if wd.invert(w) != w:
                return _report("bijection", params, FAIL,
                               {"reason": "involution not sent to a self-inverse word",
                                "perm": str(p), "word": str(w)}, t0=t0)
    if set(image) != set(catalan):
        missing = sorted(set(catalan) - set(image))
        return _report("bijection", params, FAIL,
                       {"reason": "not surjective", "missed": str(missing[0])}, t0=t0)
    for w in catalan:
        if bj.phi(bj.phi_inverse(w, rule), rule) != w:
            return _report("bijection", params, FAIL,
                           {"reason": "phi(phi_inverse(w)) != w", "word": str(w)}, t0=t0)
    orientation = 1 if plus else -1
    details = {"orientation": orientation,
               "law": ("maj(w)-maj(w^-1) = 2(maj(p)-maj(p^-1))" if plus
                       else "maj(w)-maj(w^-1) = 2(maj(p^-1)-maj(p))"),
               "positive_orientation_counterexample": plus_witness}
    counts = {"permutations": len(avoiders), "words": len(catalan), "involutions": involutions}
    return _report("bijection", params, PASS, None, counts, details, t0)


def check_random_matchings(n: int, trials: int = 100, seed: int = 0,
                           rule: str = bj.DEFAULT_RULE) -> VerificationReport:
    """Random within-class matchings give the same word statistic for every p."""
    t0 = time.perf_counter()
    params = {"n": n, "trials": trials, "seed": seed, "rule": rule}
    avoiders = perms.enumerate_avoiding_123(n)
    reference = {p: bj.word_statistic(bj.phi(p, rule)) for p in avoiders}
    ref_multiset = Counter(reference.values())
    rng = random.Random(seed)
    for trial in range(trials):
        hmap = bj.random_halfword_map(n, rng, rule)
        words = set()
        stats = Counter()
        for p in avoiders:
            w = bj.phi(p, rule, hmap=hmap)
            words.add(w)
            s = bj.word_statistic(w)
            stats[s] += 1
            if s != reference[p]:
                return _report("random_matchings", params, FAIL,
                               {"trial": trial, "perm": str(p), "word": str(w),
                                "stat": s, "reference": reference[p]}, t0=t0)
        if len(words) != len(avoiders) or stats != ref_multiset:
            return _report("random_matchings", params, FAIL,
                           {"trial": trial, "reason": "image or multiset changed"}, t0=t0)
    return _report("random_matchings", params, PASS,
                   counts={"trials": trials, "permutations": len(avoiders)}, t0=t0)


def check_maj_inversion(n: int) -> VerificationReport:
    """maj(w^-1) == 2n des(w) - maj(w) on CW_n."""
    t0 = time.perf_counter()
    words = wd.enumerate_catalan(n)
    for w in words:
        if wd.maj(wd.invert(w)) != 2 * n * wd.des(w) - wd.maj(w):
            return _report("maj_inversion", {"n": n}, FAIL, {"word": str(w)}, t0=t0)
    return _report("maj_inversion", {"n": n}, PASS, counts={"words": len(words)}, t0=t0)


def check_conjecture2(n: int) -> VerificationReport:
    """conjecture2_lhs(n) at q -> q^2 equals theorem_lhs(n); also compares with its own rhs."""
    t0 = time.perf_counter()
    lhs = qs.conjecture2_lhs(n)
    squared, target = lhs.substitute_power(2), qs.theorem_lhs(n)
    if squared != target:
        return _report("conjecture2", {"n": n}, FAIL, _poly_diff(squared, target), t0=t0)
    rhs = qs.conjecture2_rhs(n)
    if lhs != rhs:
        return _report("conjecture2", {"n": n}, FAIL, _poly_diff(lhs, rhs), t0=t0)
    return _report("conjecture2", {"n": n}, PASS, details={"lhs": str(lhs)}, t0=t0)


def check_rsk(n: int) -> VerificationReport:
    from itertools import permutations as all_perms

    from .rsk import rsk, rsk_inverse

    t0 = time.perf_counter()
    count = 0
    for images in all_perms(range(1, n + 1)):
        p = Permutation(images)
        count += 1
        pair = rsk(p)
        problems = []
        if rsk_inverse(pair) != p:
            problems.append("round trip")
        if rsk(perms.inverse(p)) != pair.swapped():
            problems.append("inverse does not swap the pair")
        if tab.maj(pair.second) != perms.maj(p):
            problems.append("maj(second) != maj(p)")
        if pair.first.num_columns != perms.lis_length(p):
            problems.append("columns != LIS")
        if (pair.first == pair.second) != perms.is_involution(p):
            problems.append("diagonal pair <-> involution")
        if problems:
            return _report("rsk", {"n": n}, FAIL, {"perm": str(p), "problems": problems}, t0=t0)
    return _report("rsk", {"n": n}, PASS, counts={"permutations": count}, t0=t0)


CHECKS = {
    "theorem": check_theorem,
    "lemma1": check_lemma1,
    "lemma2": check_lemma2,
    "lemma3": check_lemma3,
    "bijection": check_bijection,
    "conjecture1": check_conjecture1,
    "conjecture2": check_conjecture2,
    "maj-inversion": check_maj_inversion,
    "rsk": check_rsk,
    "random-matchings": check_random_matchings,
}

