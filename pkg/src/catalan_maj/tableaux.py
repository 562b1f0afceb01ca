"""Standard Young tableaux in French (first-quadrant) orientation.

``rows[0]`` is the bottom row; columns increase going up. Only general shapes
are needed for RSK output, the two-column enumeration is what the bijection uses.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .words import is_ballot


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries must be exactly 1..n: {rows}")
        for r in rows:
            if not r:
                raise ValueError("empty row")
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row not increasing: {r}")
        for lower, upper in zip(rows, rows[1:]):
            if len(upper) > len(lower):
                raise ValueError(f"not a partition shape: {self.shape}")
            if any(upper[c] <= lower[c] for c in range(len(upper))):
                raise ValueError(f"column not increasing upward: {rows}")

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def num_columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, c: int) -> tuple[int, ...]:
        """Entries of column c (0-based), bottom to top."""
        return tuple(r[c] for r in self.rows if len(r) > c)

    def row_of(self) -> dict[int, int]:
        return {x: i for i, r in enumerate(self.rows) for x in r}

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict | str) -> Tableau:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(tuple(r) for r in obj["rows"]))

    def __str__(self) -> str:
        # printed top row first, the way it is drawn
        width = len(str(self.n)) if self.n else 1
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in reversed(self.rows))


def descent_set(t: Tableau) -> set[int]:
    """Values i whose successor i+1 sits in a strictly higher row."""
    row = t.row_of()
    return {i for i in range(1, t.n) if row[i + 1] > row[i]}


def maj(t: Tableau) -> int:
    return sum(descent_set(t))


def from_second_column(n: int, right: Iterable[int]) -> Tableau:
    """Two-column tableau whose right column holds `right` (validated)."""
    right = sorted(right)
    left = [x for x in range(1, n + 1) if x not in set(right)]
    rows = tuple((left[r], right[r]) if r < len(right) else (left[r],) for r in range(len(left)))
    return Tableau(rows)


def second_column_word(t: Tableau) -> tuple[int, ...]:
    """Indicator of the right column: bit i is 1 iff i is in column 2."""
    if t.num_columns > 2:
        raise ValueError("tableau has more than 2 columns")
    right = set(t.column(1)) if t.num_columns == 2 else set()
    return tuple(1 if i in right else 0 for i in range(1, t.n + 1))


@dataclass(frozen=True)
class TwoColClass:
    n: int
    j: int
    D: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "D", frozenset(self.D))
        if not 0 <= self.j <= self.n // 2:
            raise ValueError(f"need 0 <= j <= n//2, got n={self.n}, j={self.j}")
        if any(not 1 <= d <= self.n - 1 for d in self.D):
            raise ValueError(f"descent set must lie in 1..{self.n - 1}")


@lru_cache(maxsize=None)
def _two_col(n: int, j: int) -> tuple[Tableau, ...]:
    out = []
    for right in combinations(range(2, n + 1), j):
        bits = [0] * n
        for x in right:
            bits[x - 1] = 1
        if is_ballot(bits):
            out.append(from_second_column(n, right))
    return tuple(out)


def enumerate_two_col(n: int, j: int) -> list[Tableau]:
    """All SYT of n boxes with at most two columns and j boxes in the second.

    Ordered by the right column's entry set, lexicographically.
    """
    if not 0 <= j <= n // 2:
        raise ValueError(f"need 0 <= j <= n//2, got n={n}, j={j}")
    return list(_two_col(n, j))


def enumerate_T_D(c: TwoColClass) -> list[Tableau]:
    return [t for t in _two_col(c.n, c.j) if descent_set(t) == c.D]


def two_col_classes(n: int, j: int) -> dict[frozenset[int], list[Tableau]]:
    """Realized descent classes at (n, j), keyed by descent set."""
    classes: dict[frozenset[int], list[Tableau]] = {}
    for t in _two_col(n, j):
        classes.setdefault(frozenset(descent_set(t)), []).append(t)
    return classes


def continuation_counts(t: Tableau) -> list[int]:
    """Right-column run lengths above each anchor, sections taken bottom-up.

    An anchor is a value a with a in the left column and a+1 in the right one
    (the only non-descents of a two-column tableau). The count for an anchor is
    how many of a+2, a+3, ... continue up the right column before the run breaks.
    """
    bits = second_column_word(t)
    n = len(bits)
    counts = []
    for a in range(1, n):
        if bits[a - 1] == 0 and bits[a] == 1:
            c = 0
            while a + 1 + c < n and bits[a + 1 + c] == 1:
                c += 1
            counts.append(c)
    return counts
