"""Run every verifier over a range of n and write one JSON report per check."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from catalan_maj import verify


@dataclass
class SweepConfig:
    max_n: dict[str, int] = field(default_factory=lambda: {
        "theorem": 9, "lemma1": 10, "lemma2": 8, "lemma3": 8, "bijection": 8,
        "maj-inversion": 8, "rsk": 7, "conjecture2": 8,
    })
    conjecture1: dict[int, int] = field(default_factory=lambda: {1: 10, 2: 8, 3: 7})
    matchings_n: tuple[int, ...] = (6, 7, 8)
    trials: int = 100
    seed: int = 0
    out: Path = Path("results")


def run(cfg: SweepConfig) -> dict[str, list[dict]]:
    results: dict[str, list[dict]] = {}
    for name, top in cfg.max_n.items():
        results[name] = [verify.CHECKS[name](n).to_dict(timing=True) for n in range(1, top + 1)]
    results["conjecture1"] = [verify.check_conjecture1(n, k).to_dict(timing=True)
                              for k, top in cfg.conjecture1.items() for n in range(k, top + 1)]
    results["random-matchings"] = [
        verify.check_random_matchings(n, cfg.trials, cfg.seed).to_dict(timing=True)
        for n in cfg.matchings_n]
    return results


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=SweepConfig.out)
    ap.add_argument("--trials", type=int, default=SweepConfig.trials)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    cfg = SweepConfig(trials=args.trials, seed=args.seed, out=args.out)

    t0 = time.perf_counter()
    results = run(cfg)
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, reports in results.items():
        (cfg.out / f"{name}.json").write_text(json.dumps(reports, indent=2))
        statuses = sorted({r["status"] for r in reports})
        print(f"{name:<17} {len(reports):>3} reports  {','.join(statuses)}")
    cfg_dict = {k: (str(v) if isinstance(v, Path) else v) for k, v in asdict(cfg).items()}
    (cfg.out / "config.json").write_text(json.dumps(cfg_dict, indent=2))
    print(f"done in {time.perf_counter() - t0:.1f}s, reports in {cfg.out}/")


if __name__ == "__main__":
    main()
