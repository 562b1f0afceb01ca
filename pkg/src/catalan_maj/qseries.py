"""Exact Laurent polynomials in q and the F / H series at t = q.

Everything is integer arithmetic on ``{exponent: coefficient}`` dicts; no
floats anywhere.
"""
from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping

from . import permutations as perms
from . import words as wd

_EXP_LIMIT = 1 << 40


class DivisibilityError(ArithmeticError):
    """Exact division left a nonzero remainder."""

    def __init__(self, message: str, composition: tuple[int, ...] | None = None):
        super().__init__(message)
        self.composition = composition


class LaurentPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            e, c = int(e), int(c)
            if abs(e) > _EXP_LIMIT:
                raise OverflowError(f"exponent {e} out of range")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> LaurentPoly:
        """Sum of q^e over the given exponents (with multiplicity)."""
        return cls(Counter(exps))

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of zero polynomial")
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("low degree of zero polynomial")
        return min(self._terms)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def __call__(self, x):
        """Evaluate exactly (ints or Fractions; negative powers become Fractions)."""
        total = 0
        for e, c in self._terms.items():
            total += c * (Fraction(x) ** e if e < 0 else x ** e)
        return total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> LaurentPoly:
        """q -> q^k (k = -1 reflects)."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def reflect(self) -> LaurentPoly:
        return self.substitute_power(-1)

    def is_palindromic(self) -> bool:
        if not self._terms:
            return True
        lo, hi = self.low_degree(), self.degree()
        return all(self.coeff(e) == self.coeff(lo + hi - e) for e in self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.items()!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = str(abs(c))
            else:
                base = "q" if e == 1 else f"q^{e}"
                mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        head = ("-" if first_sign == "-" else "") + first
        return " ".join([head] + [f"{s} {m}" for s, m in parts[1:]])

    def to_json(self) -> dict:
        return {"variable": "q",
                "terms": [{"exp": e, "coeff": str(c)} for e, c in self.items()]}

    @classmethod
    def from_json(cls, obj: dict | str) -> LaurentPoly:
        if isinstance(obj, str):
            obj = json.loads(obj)
        if obj.get("variable", "q") != "q":
            raise ValueError("only the variable q is supported")
        return cls((int(t["exp"]), int(t["coeff"])) for t in obj["terms"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["exp", "coeff"])
        writer.writerows(self.items())
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> LaurentPoly:
        rows = csv.DictReader(io.StringIO(text))
        return cls((int(r["exp"]), int(r["coeff"])) for r in rows)


def _coerce(x: LaurentPoly | int) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot use {type(x).__name__} as a LaurentPoly")


def add(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p + r


def mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p * r


def neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient Q with num == den * Q, or DivisibilityError."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly()
    rem = dict(num.terms)
    dterms = den.terms
    dtop = den.degree()
    dlow = den.low_degree()
    lead = dterms[dtop]
    quot: dict[int, int] = {}
    # long division from the top; a Laurent quotient cannot go below this
    floor = num.low_degree() - dlow
    while rem:
        top = max(rem)
        e = top - dtop
        if e < floor:
            break
        c, r = divmod(rem[top], lead)
        if r:
            break
        quot[e] = c
        for de, dc in dterms.items():
            k = de + e
            v = rem.get(k, 0) - c * dc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    if rem:
        raise DivisibilityError(f"{num} is not divisible by {den}")
    return LaurentPoly(quot)


def pochhammer(m: int, a: int) -> LaurentPoly:
    """(q^m; q)_a = prod_{r<a} (1 - q^(m+r))."""
    if a < 0:
        raise ValueError("length must be non-negative")
    out = LaurentPoly.one()
    for r in range(a):
        out = out * LaurentPoly({0: 1, m + r: -1})
    return out


def _pochhammer_factors(m: int, a: int) -> Counter:
    # (1 - q^e) factors of (q^m; q)_a, as a multiset of e
    return Counter(range(m, m + a))


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> LaurentPoly:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return exact_div(pochhammer(1, n), pochhammer(1, k) * pochhammer(1, n - k))


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into exactly k positive parts, lexicographic."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for a in range(1, n - k + 2):
        for rest in compositions(n - a, k - 1):
            yield (a,) + rest


@dataclass(frozen=True)
class FTerm:
    """One composition's term as numerator / prod (1 - q^e) over `den_factors`."""

    composition: tuple[int, ...]
    numerator: LaurentPoly
    den_factors: Counter

    @property
    def denominator(self) -> LaurentPoly:
        out = LaurentPoly.one()
        for e, mult in sorted(self.den_factors.items()):
            for _ in range(mult):
                out = out * LaurentPoly({0: 1, e: -1})
        return out


def f_term(a: tuple[int, ...], n: int) -> FTerm:
    """Term of F at t = q for composition a; its part count plays the role of k."""
    k = len(a)
    exp = sum(comb(x, 2) for x in a) + sum((k - i) * a[i - 1] for i in range(1, k))
    qq_n = pochhammer(1, n)
    num = LaurentPoly.monomial(exp) * qq_n * qq_n
    den = _pochhammer_factors(k, a[0]) + _pochhammer_factors(1, a[-1])
    for i in range(1, k):
        num = num * gaussian_binomial(a[i - 1] + a[i] - 1, a[i - 1])
        den += _pochhammer_factors(k - i, a[i - 1] + a[i])
    return FTerm(tuple(a), num, den)


def _f_compositions(n: int, k: int, variant: str) -> Iterator[tuple[int, ...]]:
    if variant == "A":
        yield from compositions(n, k)
    elif variant == "B":
        for i in range(1, k + 1):
            yield from compositions(n, i)
    else:
        raise ValueError(f"unknown F variant {variant!r}; use 'A' or 'B'")


SHIPPED_VARIANT = "B"


def F_terms(n: int, k: int, variant: str = SHIPPED_VARIANT) -> list[FTerm]:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return [f_term(a, n) for a in _f_compositions(n, k, variant)]


def F_nk(n: int, k: int, variant: str = SHIPPED_VARIANT, strict: bool = True) -> LaurentPoly:
    """F_{n,k}(q, q).

    strict: divide each composition's term exactly (DivisibilityError names the
    composition). Otherwise bring all terms over one common denominator,
    the least multiset of (1 - q^e) factors covering each term, and divide once.
    """
    terms = F_terms(n, k, variant)
    if strict:
        total = LaurentPoly()
        for t in terms:
            try:
                total = total + exact_div(t.numerator, t.denominator)
            except DivisibilityError:
                raise DivisibilityError(
                    f"F_{{{n},{k}}} variant {variant}: term for composition {t.composition} is not a polynomial",
                    t.composition) from None
        return total
    common: Counter = Counter()
    for t in terms:
        common |= t.den_factors
    total = LaurentPoly()
    for t in terms:
        extra = FTerm(t.composition, t.numerator, common - t.den_factors)
        total = total + t.numerator * extra.denominator
    try:
        return exact_div(total, FTerm((), total, common).denominator)
    except DivisibilityError:
        raise DivisibilityError(f"F_{{{n},{k}}} variant {variant}: combined sum is not a polynomial") from None


def nondivisible_compositions(n: int, k: int, variant: str = SHIPPED_VARIANT) -> list[tuple[int, ...]]:
    bad = []
    for t in F_terms(n, k, variant):
        try:
            exact_div(t.numerator, t.denominator)
        except DivisibilityError:
            bad.append(t.composition)
    return bad


def H_nk(n: int, k: int) -> LaurentPoly:
    """Sum over lis(sigma) <= k of q^(maj sigma + C(n,2) - maj sigma^-1)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    c = comb(n, 2)
    return LaurentPoly.from_exponents(
        perms.maj(p) + c - perms.maj(perms.inverse(p)) for p in perms.enumerate_lis_at_most(n, k))


def theorem_lhs(n: int) -> LaurentPoly:
    return LaurentPoly.from_exponents(
        wd.maj(w) - wd.maj(wd.invert(w)) for w in wd.enumerate_catalan(n))


def theorem_rhs(n: int) -> LaurentPoly:
    return LaurentPoly.from_exponents(
        2 * (perms.maj(p) - perms.maj(perms.inverse(p))) for p in perms.enumerate_avoiding_123(n))


def conjecture2_lhs(n: int) -> LaurentPoly:
    return LaurentPoly.from_exponents(
        wd.maj(w) - n * wd.des(w) for w in wd.enumerate_catalan(n))


def conjecture2_rhs(n: int) -> LaurentPoly:
    return LaurentPoly.from_exponents(
        perms.maj(p) - perms.maj(perms.inverse(p)) for p in perms.enumerate_avoiding_123(n))
