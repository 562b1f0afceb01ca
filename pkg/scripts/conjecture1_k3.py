"""Explore F_{n,k}(q,q) = H_{n,k}(q,q) beyond the proven cases k <= 2.

Lists the compositions whose single term is not a polynomial, then compares the
combined sum with H.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from catalan_maj import qseries as qs
from catalan_maj import verify


@dataclass
class ExploreConfig:
    k: int = 3
    max_n: int = 7
    variant: str = qs.SHIPPED_VARIANT


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=ExploreConfig.k)
    ap.add_argument("--max-n", type=int, default=ExploreConfig.max_n)
    ap.add_argument("--variant", choices=["A", "B"], default=ExploreConfig.variant)
    args = ap.parse_args()
    cfg = ExploreConfig(args.k, args.max_n, args.variant)

    for n in range(cfg.k, cfg.max_n + 1):
        r = verify.check_conjecture1(n, cfg.k, cfg.variant)
        bad = r.details.get("nondivisible_compositions", [])
        print(f"n={n} k={cfg.k}: {r.status:<20} perms={r.counts.get('permutations', '-'):<6} "
              f"non-polynomial terms={len(bad)}")
        if bad:
            print("    " + " ".join("(" + ",".join(map(str, a)) + ")" for a in bad))
        if r.status != verify.PASS:
            print(f"    witness: {r.witness}")


if __name__ == "__main__":
    main()
