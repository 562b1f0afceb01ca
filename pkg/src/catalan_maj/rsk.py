"""Robinson-Schensted row insertion and its inverse.

Convention: ``first`` is the insertion tableau and ``second`` the recording
tableau. With bottom-first rows this gives maj(second) == maj(p) and
rsk(inverse(p)) == rsk(p).swapped(), matching the worked 7562143 example.
"""
from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .permutations import Permutation
from .tableaux import Tableau


@dataclass(frozen=True)
class TableauPair:
    first: Tableau
    second: Tableau

    def __post_init__(self) -> None:
        if self.first.shape != self.second.shape:
            raise ValueError(f"shape mismatch: {self.first.shape} vs {self.second.shape}")

    def swapped(self) -> TableauPair:
        return TableauPair(self.second, self.first)

    def to_json(self) -> dict:
        return {"p": self.first.to_json(), "q": self.second.to_json()}

    @classmethod
    def from_json(cls, obj: dict | str) -> TableauPair:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(Tableau.from_json(obj["p"]), Tableau.from_json(obj["q"]))


def rsk(p: Permutation) -> TableauPair:
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(p.images, 1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[k], x = x, row[k]
            r += 1
    return TableauPair(Tableau(tuple(map(tuple, P))), Tableau(tuple(map(tuple, Q))))


def rsk_inverse(pair: TableauPair) -> Permutation:
    P = [list(r) for r in pair.first.rows]
    where = {x: (r, c) for r, row in enumerate(pair.second.rows) for c, x in enumerate(row)}
    n = pair.first.n
    out = [0] * n
    for step in range(n, 0, -1):
        r, c = where[step]
        if c != len(P[r]) - 1:
            raise ValueError("recording tableau is not standard")
        x = P[r].pop()
        if not P[r]:
            P.pop()
        for rr in range(r - 1, -1, -1):
            row = P[rr]
            k = bisect_left(row, x) - 1
            row[k], x = x, row[k]
        out[step - 1] = x
    return Permutation(tuple(out))
