"""Slow, obviously-correct reference computations. Nothing here imports the package."""
from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations, product


def catalan_recurrence(n):
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def prefix_ok(bits):
    return all(2 * sum(bits[:i]) <= i for i in range(len(bits) + 1))


def all_words(length):
    return ["".join(map(str, b)) for b in product((0, 1), repeat=length)]


def catalan_words(n):
    return [w for w in all_words(2 * n) if w.count("1") == n and prefix_ok([int(c) for c in w])]


def halfwords(n, j=None):
    return [w for w in all_words(n)
            if prefix_ok([int(c) for c in w]) and (j is None or w.count("1") == j)]


def word_descents(w):
    return {i for i in range(1, len(w)) if w[i - 1] == "1" and w[i] == "0"}


def word_patterns(w):
    return {i for i in range(1, len(w)) if w[i - 1] == "0" and w[i] == "1"}


def word_invert(w):
    return "".join("1" if c == "0" else "0" for c in reversed(w))


def family(n, j, P):
    return [w for w in halfwords(n, j) if word_patterns(w) == set(P)]


def perm_maj(p):
    return sum(i for i in range(1, len(p)) if p[i - 1] > p[i])


def perm_inverse(p):
    return tuple(sorted(range(1, len(p) + 1), key=lambda i: p[i - 1]))


def lis_bruteforce(p):
    n = len(p)
    for size in range(n, 0, -1):
        for idx in combinations(range(n), size):
            if all(p[a] < p[b] for a, b in zip(idx, idx[1:])):
                return size
    return 0


def perms_lis_at_most(n, k):
    return [p for p in permutations(range(1, n + 1)) if lis_bruteforce(p) <= k]


def two_col_tableaux(n, j):
    """Every filling of a <=2-column shape with j boxes on the right, checked cell by cell."""
    out = []
    for right in combinations(range(1, n + 1), j):
        left = [x for x in range(1, n + 1) if x not in right]
        rows = [(left[r], right[r]) if r < j else (left[r],) for r in range(len(left))]
        if len(right) > len(left):
            continue
        ok = all(r[0] < r[1] for r in rows if len(r) == 2)
        ok &= all(rows[r + 1][c] > rows[r][c] for r in range(len(rows) - 1) for c in range(len(rows[r + 1])))
        if ok:
            out.append(tuple(rows))
    return out


def tableau_descents(rows):
    where = {x: i for i, r in enumerate(rows) for x in r}
    n = len(where)
    return {i for i in range(1, n) if where[i + 1] > where[i]}


def q_pascal(n, k):
    """Gaussian binomial coefficients via [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or k > n:
        return Counter()
    if k == 0 or k == n:
        return Counter({0: 1})
    out = Counter(q_pascal(n - 1, k - 1))
    for e, c in q_pascal(n - 1, k).items():
        out[e + k] += c
    return +out


def exponent_counter(values):
    return +Counter(values)
