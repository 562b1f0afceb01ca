"""Compare class-translation rules: cardinalities, and the sign of the per-element law.

For each rule and n this prints whether every class has the same size as its
family, and whether maj(w) - maj(w^-1) equals +2(maj p - maj p^-1) for every
123-avoider (orientation +1), the negative of it (-1), or neither.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from catalan_maj import bijection as bj
from catalan_maj import verify


@dataclass
class RuleConfig:
    rules: tuple[str, ...] = ("R1", "R2", "invariant")
    max_n: int = 8


def orientation(n: int, rule: str) -> str:
    try:
        s = bj.statistic_orientation(n, rule)
    except ValueError as exc:
        return f"error: {exc}"
    return {1: "+1", -1: "-1", None: "none"}[s]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=RuleConfig.max_n)
    ap.add_argument("--rules", nargs="+", default=list(RuleConfig.rules))
    args = ap.parse_args()
    cfg = RuleConfig(rules=tuple(args.rules), max_n=args.max_n)

    print(f"{'rule':<10} {'n':>2}  {'sizes':<6} orientation")
    for rule in cfg.rules:
        for n in range(1, cfg.max_n + 1):
            sizes = verify.check_lemma1(n, rule).status
            print(f"{rule:<10} {n:>2}  {sizes:<6} {orientation(n, rule)}")
    w = bj.phi(bj.Permutation.parse("231"))
    print(f"\nwitness: phi(231) = {w}, word side {bj.word_statistic(w)}, "
          f"perm side {bj.perm_statistic(bj.Permutation.parse('231'))}")


if __name__ == "__main__":
    main()
