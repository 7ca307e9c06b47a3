"""Command-line front end: ``chiralmap construct | sweep | table1``."""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .constructions import TABLE1, ConstructionPlan, HyperbolicType, Outcome, dualize, table1_lookup
from .errors import ChiralMapError, NotHyperbolic
from .groups import degree_cap
from .maps import export_dot
from .report import FAIL, PASS, SKIPPED, UNSUPPORTED, VerificationReport, verify_generators, verify_type

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_UNSUPPORTED = 2
EXIT_NOT_HYPERBOLIC = 3

_EXIT = {PASS: EXIT_PASS, FAIL: EXIT_FAIL, UNSUPPORTED: EXIT_UNSUPPORTED, SKIPPED: EXIT_UNSUPPORTED}


def cmd_construct(args) -> int:
    try:
        rep, g = verify_type(args.m, args.n, oracle=args.oracle)
    except NotHyperbolic as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_HYPERBOLIC
    except ChiralMapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.dot and g is not None:
        Path(args.dot).write_text(export_dot(g), encoding="utf-8")
    print(rep.to_json() if args.json else rep.summary())
    return _EXIT[rep.overall]


def sweep_types(min_m: int, max_m: int, min_n: int, max_n: int) -> list[tuple[int, int]]:
    return [
        (m, n)
        for m in range(min_m, max_m + 1)
        for n in range(min_n, max_n + 1)
        if HyperbolicType.is_hyperbolic(m, n)
    ]


def _sweep_one(job: tuple[int, int, int]) -> dict:
    m, n, cap = job
    try:
        rep, _ = verify_type(m, n, degree_limit=cap)
    except ChiralMapError as exc:
        rep = VerificationReport(requested_type=[m, n], overall=FAIL, error=f"{type(exc).__name__}: {exc}")
    return rep.to_dict()


def run_sweep(types, cap: int, jobs: int | None = None) -> list[VerificationReport]:
    work = [(m, n, cap) for m, n in types]
    if jobs == 1:
        dicts = [_sweep_one(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            dicts = list(pool.map(_sweep_one, work, chunksize=4))
    reports = [VerificationReport.from_dict(d) for d in dicts]
    reports.sort(key=lambda r: tuple(r.requested_type))
    return reports


def cmd_sweep(args) -> int:
    cap = args.degree_cap if args.degree_cap is not None else degree_cap()
    types = sweep_types(args.min_m, args.max_m, args.min_n, args.max_n)
    reports = run_sweep(types, cap, args.jobs)
    counts = Counter(r.overall for r in reports)
    summary = {k: counts.get(k, 0) for k in (PASS, FAIL, UNSUPPORTED, SKIPPED)}
    doc = {
        "bounds": {"min_m": args.min_m, "max_m": args.max_m, "min_n": args.min_n, "max_n": args.max_n},
        "degree_cap": cap,
        "summary": summary,
        "reports": [r.to_dict() for r in reports],
    }
    Path(args.out).write_text(json.dumps(doc, indent=1, ensure_ascii=False), encoding="utf-8")
    for r in reports:
        if r.overall == FAIL:
            print(r.summary())
    print(" ".join(f"{k}={v}" for k, v in summary.items()))
    return EXIT_FAIL if summary[FAIL] else EXIT_PASS


def table1_reports(include_duals: bool = True) -> list[VerificationReport]:
    out = []
    for m, n in TABLE1:
        g = table1_lookup((m, n))
        variants = [g, dualize(g)] if include_duals else [g]
        for h in variants:
            plan = ConstructionPlan((h.type.m, h.type.n), Outcome.SUPPORTED, params=h.params)
            out.append(verify_generators(h, plan))
    return out


def cmd_table1(args) -> int:
    reports = table1_reports()
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False))
    else:
        for r in reports:
            print(r.summary())
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chiralmap", description="Chiral maps with alternating automorphism groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build and verify one type {m,n}")
    c.add_argument("-m", type=int, required=True, help="face length")
    c.add_argument("-n", type=int, required=True, help="vertex valency")
    c.add_argument("--json", action="store_true", help="print the full JSON report")
    c.add_argument("--dot", metavar="PATH", help="write the permutation diagram as DOT")
    c.add_argument("--oracle", choices=("auto", "conjugation", "abstract"), default="auto")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("sweep", help="verify every hyperbolic type in a range")
    s.add_argument("--min-m", type=_positive, default=3)
    s.add_argument("--max-m", type=_positive, required=True)
    s.add_argument("--min-n", type=_positive, default=3)
    s.add_argument("--max-n", type=_positive, required=True)
    s.add_argument("--degree-cap", type=_positive, default=None, help="skip types of larger degree")
    s.add_argument("--jobs", type=_positive, default=None, help="worker processes (default: all cores)")
    s.add_argument("--out", required=True, metavar="PATH", help="JSON report file")
    s.set_defaults(func=cmd_sweep)

    t = sub.add_parser("table1", help="verify the tabulated small types and their duals")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table1)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
