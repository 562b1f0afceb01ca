"""Command-line front end: ``catalan-maj <command> ...``.

Exit codes: 0 success / verified, 1 verification failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import bijection as bj
from . import permutations as perms
from . import qseries as qs
from . import tableaux as tab
from . import verify
from . import words as wd
from .permutations import Permutation
from .rsk import rsk
from .tableaux import Tableau, TwoColClass

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


def _int_set(text: str) -> frozenset[int]:
    return frozenset(int(x) for x in text.replace(";", ",").split(",") if x.strip())


def _emit_rows(rows: list[dict], fmt: str, text_key: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if fmt == "csv":
        if not rows:
            return ""
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
        return buf.getvalue().rstrip("\n")
    key = text_key or next(iter(rows[0])) if rows else None
    return "\n".join(str(r[key]) for r in rows)


def _guard(args, n: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > args.max_n:
        raise ValueError(f"n={n} exceeds --max-n {args.max_n}")


def cmd_enum(args) -> int:
    _guard(args, args.n)
    if args.kind == "words":
        if args.family:
            key = wd.FamilyKey.parse(args.family)
            if key.n != args.n:
                raise ValueError(f"family length {key.n} does not match --n {args.n}")
            items = wd.enumerate_family(key)
        elif args.half:
            items = wd.enumerate_halfwords(args.n, args.j)
        else:
            items = wd.enumerate_catalan(args.n)
        rows = [{"word": str(w), "maj": wd.maj(w), "des": wd.des(w)} for w in items]
        print(_emit_rows(rows, args.format, "word"))
    elif args.kind == "tableaux":
        js = [args.j] if args.j is not None else range(args.n // 2 + 1)
        items = []
        for j in js:
            if args.descents is not None:
                items += tab.enumerate_T_D(TwoColClass(args.n, j, _int_set(args.descents)))
            else:
                items += tab.enumerate_two_col(args.n, j)
        rows = [{"rows": json.dumps(t.to_json()["rows"]), "descents": sorted(tab.descent_set(t)),
                 "maj": tab.maj(t)} for t in items]
        print(_emit_rows(rows, args.format, "rows"))
    else:
        k = args.lis_max if args.lis_max is not None else args.n
        items = perms.enumerate_lis_at_most(args.n, k)
        rows = [{"perm": str(p), "maj": perms.maj(p), "lis": perms.lis_length(p)} for p in items]
        print(_emit_rows(rows, args.format, "perm"))
    return EXIT_OK


def cmd_map(args) -> int:
    if args.direction == "perm-to-word":
        if args.perm is None:
            raise ValueError("--perm is required")
        p = Permutation.parse(args.perm)
        _guard(args, len(p))
        w = bj.phi(p)
        pair = rsk(p)
        w1, w2 = wd.split_pair(w)
        out = {"perm": str(p), "word": str(w), "pair": pair.to_json(),
               "halfwords": [str(w1), str(w2)]}
        result = str(w)
    else:
        if args.word is None:
            raise ValueError("--word is required")
        w = wd.CatalanWord.parse(args.word)
        _guard(args, w.n)
        p = bj.phi_inverse(w)
        out = {"word": str(w), "perm": str(p), "pair": rsk(p).to_json()}
        result = str(p)
    if args.format == "json":
        print(json.dumps(out, indent=2))
    elif args.format == "csv":
        print(_emit_rows([{k: v for k, v in out.items() if k in ("perm", "word")}], "csv"))
    else:
        print(result)
    return EXIT_OK


def _word_stats(w: wd.BinaryWord) -> dict:
    inv = wd.invert(w)
    return {"word": str(w), "length": len(w), "ones": w.ones,
            "descents": sorted(wd.descent_set(w)), "maj": wd.maj(w), "des": wd.des(w),
            "patterns01": sorted(wd.pattern01_positions(w)),
            "inverse": str(inv), "inverse_descents": sorted(wd.descent_set(inv)),
            "maj_inverse": wd.maj(inv),
            "catalan": wd.is_ballot(w.bits) and 2 * w.ones == len(w),
            "halfword": wd.is_ballot(w.bits)}


def _perm_stats(p: Permutation) -> dict:
    inv = perms.inverse(p)
    out = {"perm": str(p), "descents": sorted(perms.descent_set(p)), "maj": perms.maj(p),
           "inverse": str(inv), "maj_inverse": perms.maj(inv), "lis": perms.lis_length(p),
           "involution": perms.is_involution(p), "rsk": rsk(p).to_json()}
    if out["lis"] <= 2:
        out["word"] = str(bj.phi(p))
    return out


def _tableau_stats(t: Tableau) -> dict:
    out = {"rows": [list(r) for r in t.rows], "shape": list(t.shape), "n": t.n,
           "descents": sorted(tab.descent_set(t)), "maj": tab.maj(t), "columns": t.num_columns}
    if t.num_columns <= 2:
        out["halfword"] = str(bj.tableau_to_halfword(t))
    return out


def cmd_stats(args) -> int:
    if args.word is not None:
        out = _word_stats(wd.BinaryWord.parse(args.word))
    elif args.perm is not None:
        out = _perm_stats(Permutation.parse(args.perm))
    else:
        t = Tableau.from_json(Path(args.tableau_file).read_text())
        out = _tableau_stats(t)
    if args.format == "json":
        print(json.dumps(out, indent=2))
    elif args.format == "csv":
        print(_emit_rows([out], "csv"))
    else:
        for k, v in out.items():
            print(f"{k}: {v}")
    return EXIT_OK


SERIES = {
    "F": lambda a: qs.F_nk(a.n, a.k, a.variant, strict=a.k <= 2 or not qs.nondivisible_compositions(a.n, a.k, a.variant)),
    "H": lambda a: qs.H_nk(a.n, a.k),
    "theorem-lhs": lambda a: qs.theorem_lhs(a.n),
    "theorem-rhs": lambda a: qs.theorem_rhs(a.n),
    "conjecture2-lhs": lambda a: qs.conjecture2_lhs(a.n),
}


def cmd_series(args) -> int:
    _guard(args, args.n)
    if args.name in ("F", "H") and args.k is None:
        raise ValueError("--k is required for F and H")
    poly = SERIES[args.name](args)
    if args.format == "json":
        print(json.dumps(poly.to_json(), indent=2))
    elif args.format == "csv":
        print(poly.to_csv().rstrip("\n"))
    else:
        print(poly)
    return EXIT_OK


def _run_check(job: tuple[str, dict]) -> verify.VerificationReport:
    name, kwargs = job
    return verify.CHECKS[name](**kwargs)


def cmd_verify(args) -> int:
    _guard(args, args.n)
    if args.n < 1:
        raise ValueError("n must be at least 1")
    ns = range(1, args.n + 1) if args.sweep else [args.n]
    jobs = []
    for n in ns:
        kwargs: dict = {"n": n}
        if args.check == "conjecture1":
            if args.k is None:
                raise ValueError("--k is required for conjecture1")
            if args.k > n:
                continue
            kwargs.update(k=args.k, variant=args.variant)
        if args.check == "random-matchings":
            kwargs.update(trials=args.trials, seed=args.seed)
        jobs.append((args.check, kwargs))
    if args.parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            reports = list(pool.map(_run_check, jobs))
    else:
        reports = [_run_check(j) for j in jobs]
    dicts = [r.to_dict(timing=args.timing) for r in reports]
    if args.format == "json":
        print(json.dumps(dicts if args.sweep else dicts[0], indent=2))
    elif args.format == "csv":
        rows = [{"check": d["check"], **{k: d["params"].get(k, "") for k in ("n", "k", "variant")},
                 "status": d["status"], "witness": json.dumps(d["witness"]),
                 "counts": json.dumps(d["counts"])} for d in dicts]
        print(_emit_rows(rows, "csv"))
    else:
        for r, d in zip(reports, dicts):
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            line = f"{r.check} {params}: {r.status.upper()}"
            if r.counts:
                line += " (" + ", ".join(f"{k}={v}" for k, v in r.counts.items()) + ")"
            if args.timing:
                line += f" [{r.seconds:.3f}s]"
            print(line)
            for key in ("identifications_holding", "law", "nondivisible_compositions"):
                if key in r.details and r.details[key]:
                    print(f"  {key}: {r.details[key]}")
            if not r.passed:
                print(f"  witness: {json.dumps(d['witness'])}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json", "csv"), default=d("text"))
    parser.add_argument("--parallel", action="store_true", default=d(False),
                        help="fan sweeps out over worker processes")
    parser.add_argument("--max-n", type=int, default=d(12), help="refuse larger n (default 12)")
    parser.add_argument("--timing", action="store_true", default=d(False),
                        help="include wall-clock timings in reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catalan-maj", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", parents=[common], help="enumerate words, tableaux or permutations")
    p.add_argument("kind", choices=("words", "tableaux", "perms"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", help='half-word family "n,j,p1;p2;..."')
    p.add_argument("--half", action="store_true", help="half-words of length n instead of Catalan words")
    p.add_argument("--j", type=int)
    p.add_argument("--descents", help='exact descent set, e.g. "1,3,4,6"')
    p.add_argument("--lis-max", type=int)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("map", parents=[common], help="apply the bijection or its inverse")
    p.add_argument("direction", choices=("perm-to-word", "word-to-perm"))
    p.add_argument("--perm")
    p.add_argument("--word")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("stats", parents=[common], help="statistics of one object")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--perm")
    g.add_argument("--tableau-file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("series", parents=[common], help="exact polynomials")
    p.add_argument("name", choices=tuple(SERIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--variant", choices=("A", "B"), default=qs.SHIPPED_VARIANT)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run a brute-force check")
    p.add_argument("check", choices=tuple(verify.CHECKS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--variant", choices=("A", "B"), default=qs.SHIPPED_VARIANT)
    p.add_argument("--sweep", action="store_true", help="check every n from 1 to N")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
