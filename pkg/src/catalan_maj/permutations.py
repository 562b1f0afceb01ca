"""Permutations in one-line notation, 1-based values."""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Space-separated ("7 5 6 2 1 4 3"); a bare digit string works for n <= 9."""
        text = text.strip()
        tokens = text.replace(",", " ").split()
        if len(tokens) == 1 and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        try:
            return cls(tuple(int(t) for t in tokens))
        except ValueError as exc:
            raise ValueError(f"bad permutation {text!r}: {exc}") from None

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.images)

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]


def descent_set(p: Permutation) -> set[int]:
    a = p.images
    return {i for i in range(1, len(a)) if a[i - 1] > a[i]}


def maj(p: Permutation) -> int:
    return sum(descent_set(p))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p.images)
    for i, x in enumerate(p.images, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def is_involution(p: Permutation) -> bool:
    return inverse(p) == p


def lis_length(p: Permutation) -> int:
    """Longest strictly increasing subsequence, patience sorting."""
    tails: list[int] = []
    for x in p.images:
        k = bisect_left(tails, x)
        if k == len(tails):
            tails.append(x)
        else:
            tails[k] = x
    return len(tails)


def _bounded_lis(n: int, k: int) -> Iterator[tuple[int, ...]]:
    # Lexicographic DFS; the prefix LIS never decreases, so prune once it exceeds k.
    used = [False] * (n + 1)
    prefix: list[int] = []

    def rec(tails: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for x in range(1, n + 1):
            if used[x]:
                continue
            pos = bisect_left(tails, x)
            if pos >= k:
                continue
            new_tails = tails[:]
            if pos == len(new_tails):
                new_tails.append(x)
            else:
                new_tails[pos] = x
            used[x] = True
            prefix.append(x)
            yield from rec(new_tails)
            prefix.pop()
            used[x] = False

    yield from rec([])


def enumerate_lis_at_most(n: int, k: int) -> list[Permutation]:
    """Permutations of n with longest increasing subsequence <= k, lexicographic."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    return [Permutation(a) for a in _bounded_lis(n, k)]


def enumerate_S_n_i(n: int, i: int) -> list[Permutation]:
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got n={n}, i={i}")
    return [p for p in enumerate_lis_at_most(n, i) if lis_length(p) == i]


def enumerate_avoiding_123(n: int) -> list[Permutation]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return enumerate_lis_at_most(n, 2)
