"""Binary words, Catalan words and Catalan half-words.

Positions are 1-indexed throughout: ``descent_set(BinaryWord.parse("0101")) == {2}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, eq=False)
class BinaryWord:
    """Finite 0/1 sequence. Equality and ordering look at the bits only."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        object.__setattr__(self, "bits", bits)
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"not a 0/1 word: {bits!r}")

    @classmethod
    def parse(cls, text: str):
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        """1-indexed access."""
        if not 1 <= i <= len(self.bits):
            raise IndexError(i)
        return self.bits[i - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return self.bits == other.bits

    def __lt__(self, other: BinaryWord) -> bool:
        return self.bits < other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    @property
    def ones(self) -> int:
        return sum(self.bits)

    def __add__(self, other: BinaryWord) -> BinaryWord:
        return BinaryWord(self.bits + other.bits)


def is_ballot(bits: Iterable[int]) -> bool:
    """True if no prefix has more 1s than 0s."""
    height = 0
    for b in bits:
        height += 1 if b == 0 else -1
        if height < 0:
            return False
    return True


class CatalanWord(BinaryWord):
    """Word of length 2n with n ones, no prefix having more 1s than 0s."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.bits) % 2 or 2 * self.ones != len(self.bits) or not is_ballot(self.bits):
            raise ValueError(f"not a Catalan word: {self}")

    @property
    def n(self) -> int:
        return len(self.bits) // 2


class HalfWord(BinaryWord):
    """Catalan half-word: any length, prefix condition only."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not is_ballot(self.bits):
            raise ValueError(f"not a Catalan half-word: {self}")

    @property
    def j(self) -> int:
        return self.ones


@dataclass(frozen=True)
class FamilyKey:
    """Half-words of length n with j ones whose 01-positions are exactly `patterns`."""

    n: int
    j: int
    patterns: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "patterns", frozenset(self.patterns))
        if self.n < 0 or self.j < 0:
            raise ValueError("n and j must be non-negative")
        if any(not 1 <= p <= self.n - 1 for p in self.patterns):
            raise ValueError(f"pattern positions must lie in 1..{self.n - 1}")
        if len(self.patterns) > self.j:
            raise ValueError("more 01 patterns than ones")

    def to_json(self) -> dict:
        return {"n": self.n, "j": self.j, "patterns": sorted(self.patterns)}

    @classmethod
    def from_json(cls, obj: dict | str) -> FamilyKey:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["n"]), int(obj["j"]), frozenset(int(p) for p in obj["patterns"]))

    @classmethod
    def parse(cls, text: str) -> FamilyKey:
        """Parse the CLI form ``"n,j,p1;p2;..."`` (pattern list may be empty)."""
        parts = text.split(",")
        if len(parts) not in (2, 3):
            raise ValueError(f"bad family spec {text!r}; expected 'n,j,p1;p2;...'")
        pats = parts[2].strip() if len(parts) == 3 else ""
        patterns = frozenset(int(p) for p in pats.split(";") if p.strip())
        return cls(int(parts[0]), int(parts[1]), patterns)


def descent_set(w: BinaryWord) -> set[int]:
    b = w.bits
    return {i for i in range(1, len(b)) if b[i - 1] == 1 and b[i] == 0}


def des(w: BinaryWord) -> int:
    return len(descent_set(w))


def maj(w: BinaryWord) -> int:
    return sum(descent_set(w))


def pattern01_positions(w: BinaryWord) -> set[int]:
    b = w.bits
    return {i for i in range(1, len(b)) if b[i - 1] == 0 and b[i] == 1}


def invert(w: BinaryWord) -> BinaryWord:
    """Reverse and complement. Catalan words stay Catalan words."""
    bits = tuple(1 - b for b in reversed(w.bits))
    if isinstance(w, CatalanWord):
        return CatalanWord(bits)
    return BinaryWord(bits)


def concat_pair(w1: HalfWord, w2: HalfWord) -> CatalanWord:
    if len(w1) != len(w2):
        raise ValueError(f"length mismatch: {len(w1)} vs {len(w2)}")
    if w1.ones != w2.ones:
        raise ValueError(f"ones-count mismatch: {w1.ones} vs {w2.ones}")
    return CatalanWord(w1.bits + invert(w2).bits)


def split_pair(w: CatalanWord) -> tuple[HalfWord, HalfWord]:
    if len(w) % 2:
        raise ValueError("odd length word cannot be split")
    n = len(w) // 2
    first = HalfWord(w.bits[:n])
    second = HalfWord(invert(BinaryWord(w.bits[n:])).bits)
    return first, second


def _ballot_words(length: int, ones: int | None = None) -> Iterator[tuple[int, ...]]:
    # Lexicographic (0 < 1) depth-first generation with prefix pruning.
    def rec(prefix: list[int], zeros: int, used: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            if ones is None or used == ones:
                yield tuple(prefix)
            return
        remaining = length - len(prefix)
        if ones is None or ones - used < remaining:
            prefix.append(0)
            yield from rec(prefix, zeros + 1, used)
            prefix.pop()
        if used + 1 <= zeros and (ones is None or used < ones):
            prefix.append(1)
            yield from rec(prefix, zeros, used + 1)
            prefix.pop()

    yield from rec([], 0, 0)


def enumerate_catalan(n: int) -> list[CatalanWord]:
    if n < 0:
        raise ValueError("n must be non-negative")
    return [CatalanWord(b) for b in _ballot_words(2 * n, n)]


def enumerate_halfwords(n: int, j: int | None = None) -> list[HalfWord]:
    """All half-words of length n (with exactly j ones if given), lexicographic."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [HalfWord(b) for b in _ballot_words(n, j)]


def enumerate_family(key: FamilyKey) -> list[HalfWord]:
    """Members of the family, lexicographic.

    Between consecutive 01 anchors each segment must be a run of 1s followed by
    0s, so a member is fixed by how many 1s go in each segment. We enumerate
    those counts directly and keep the ballot-valid words with exactly the
    required pattern set.
    """
    n, j, pats = key.n, key.j, sorted(key.patterns)
    k = len(pats)
    if k > j or any(b - a < 2 for a, b in zip(pats, pats[1:])):
        return []
    # segment m spans positions starts[m]..ends[m] (inclusive, possibly empty)
    starts = [1] + [p + 2 for p in pats]
    ends = [p - 1 for p in pats] + [n]
    lengths = [max(0, e - s + 1) for s, e in zip(starts, ends)]
    if any(e < s - 1 for s, e in zip(starts, ends)):
        return []

    out = []

    def fill(m: int, left: int, counts: list[int]) -> None:
        if m == len(lengths):
            if left:
                return
            bits = [0] * n
            for p in pats:
                bits[p] = 1  # x_{p+1} = 1 (0-indexed p)
            for s, length, c in zip(starts, lengths, counts):
                for t in range(c):
                    bits[s - 1 + t] = 1
            if is_ballot(bits) and pattern01_positions(BinaryWord(tuple(bits))) == set(pats):
                out.append(HalfWord(tuple(bits)))
            return
        for c in range(min(lengths[m], left) + 1):
            counts.append(c)
            fill(m + 1, left - c, counts)
            counts.pop()

    fill(0, j - k, [])
    return sorted(out)


def family_of(w: BinaryWord) -> FamilyKey:
    return FamilyKey(len(w), w.ones, frozenset(pattern01_positions(w)))


def segment_counts(w: BinaryWord, patterns: Iterable[int] | None = None) -> list[int]:
    """Number of 1s in each segment between consecutive 01 anchors, left to right.

    There are ``len(patterns) + 1`` segments; the anchors themselves are excluded.
    """
    pats = sorted(pattern01_positions(w) if patterns is None else patterns)
    bounds = [-1] + pats + [len(w) + 1]
    b = w.bits
    return [sum(b[bounds[m] + 1: bounds[m + 1] - 1]) for m in range(len(bounds) - 1)]


def catalan_number(n: int) -> int:
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def all_families(n: int) -> dict[FamilyKey, list[HalfWord]]:
    """Partition of all half-words of length n into families, keyed in sorted order."""
    groups: dict[FamilyKey, list[HalfWord]] = {}
    for w in enumerate_halfwords(n):
        groups.setdefault(family_of(w), []).append(w)
    return dict(sorted(groups.items(), key=lambda kv: (kv[0].j, sorted(kv[0].patterns))))


__all__ = [
    "BinaryWord", "CatalanWord", "HalfWord", "FamilyKey", "is_ballot",
    "descent_set", "des", "maj", "pattern01_positions", "invert",
    "concat_pair", "split_pair", "enumerate_catalan", "enumerate_halfwords",
    "enumerate_family", "family_of", "segment_counts", "catalan_number", "all_families",
]
