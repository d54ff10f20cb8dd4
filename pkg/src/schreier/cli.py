"""Command-line front end.

Exit codes: 0 success, 1 verification failure or mismatch, 2 usage error,
3 I/O or network error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import oeis_io, oracle
from .core import Family, SequenceId
from .recurrence import sequence_terms
from .verification import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
MAX_FAILURES_SHOWN = 10


class UsageError(Exception):
    pass


def _sequence_id(kind: str, k: Optional[int]) -> SequenceId:
    fam = Family(kind)
    if fam is Family.FIBONACCI:
        return SequenceId(fam)
    if k is None:
        raise UsageError(f"--k is required for --kind {kind}")
    try:
        return SequenceId(fam, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _terms(args) -> tuple:
    seq = _sequence_id(args.kind, args.k)
    offset = seq.family.first_index if args.offset is None else args.offset
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    try:
        values = sequence_terms(seq, offset, args.count)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return seq, offset, values


def cmd_gen(args) -> int:
    seq, offset, values = _terms(args)
    idx = range(offset, offset + len(values))
    if args.format == "csv":
        print(",".join(map(str, values)))
    elif args.format == "json":
        print(json.dumps({"sequence": str(seq), "offset": offset, "values": values}))
    elif args.format == "bfile":
        print(oeis_io.format_bfile(zip(idx, values)))
    else:
        width = max(len("n"), *(len(str(i)) for i in idx))
        print(f"{'n':>{width}}  {seq}")
        for i, v in zip(idx, values):
            print(f"{i:>{width}}  {v}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.all else [args.theorem]
    if names == [None]:
        raise UsageError("give --theorem NAME or --all")
    ok = True
    for name in names:
        report = run_suite(name, k_max=args.k_max, n_max=args.n_max, k_min=args.k_min, n_min=args.n_min)
        ok &= report.passed
        if args.json:
            print(report.to_json(timing=args.timing))
            continue
        line = report.summary()
        if args.timing:
            line += f" [{report.wall_time:.2f}s]"
        print(line)
        for f in report.failures[:MAX_FAILURES_SHOWN]:
            print(f"  {f['check']} {f['inputs']}: expected {f['expected']}, got {f['actual']}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    try:
        q = oracle.EnumerationQuery(args.k, args.n, oracle.Mode(args.mode))
        if args.list:
            sets = oracle.enumerate_sets(q, cap=args.cap)
            print(len(sets))
            for w in sets:
                print(w)
        else:
            print(oracle.count(q, cap=args.cap))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_oeis(args) -> int:
    if args.action == "export":
        if args.kind is None or args.count is None:
            raise UsageError("export needs --kind and --count")
        seq, offset, values = _terms(args)
        text = oeis_io.format_bfile(zip(range(offset, offset + len(values)), values))
        if args.output:
            Path(args.output).write_text(text + "\n")
        else:
            print(text)
        return EXIT_OK

    if args.all:
        names = list(oeis_io.RULES)
    elif args.rule:
        if args.rule not in oeis_io.RULES:
            raise UsageError(f"unknown rule {args.rule!r}; known: {', '.join(oeis_io.RULES)}")
        names = [args.rule]
    else:
        raise UsageError("check needs --rule NAME or --all")
    ok = True
    for name in names:
        report = oeis_io.check_rule(name, args.fixtures, allow_network=args.fetch)
        ok &= report.passed
        if args.json:
            print(json.dumps(report.to_dict(), sort_keys=True))
            continue
        print(report.summary())
        rows = report.rows if args.verbose else report.mismatches[:MAX_FAILURES_SHOWN]
        for n, m, a, b in rows:
            mark = "" if a == b else "  MISMATCH"
            print(f"  n={n} remote[{m}]: local {a}, remote {b}{mark}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schreier", description="Schreier-set counting sequences.")
    sub = ap.add_subparsers(dest="command", required=True)
    kinds = [f.value for f in Family]

    g = sub.add_parser("gen", help="print the first terms of a sequence")
    g.add_argument("--kind", choices=kinds, required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--count", type=int, required=True)
    g.add_argument("--format", choices=["table", "csv", "json", "bfile"], default="table")
    g.add_argument("--offset", type=int, help="first index (default: start of the sequence)")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="run an identity-checking suite")
    which = v.add_mutually_exclusive_group()
    which.add_argument("--theorem", choices=list(SUITES))
    which.add_argument("--all", action="store_true")
    v.add_argument("--k-min", type=int)
    v.add_argument("--k-max", type=int)
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--json", action="store_true", help="one JSON report per suite")
    v.add_argument("--timing", action="store_true", help="include wall time (not deterministic)")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="brute-force count or list subsets")
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--mode", choices=[m.value for m in oracle.Mode], default="schreier")
    o.add_argument("--list", action="store_true")
    o.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    o.set_defaults(func=cmd_oracle)

    e = sub.add_parser("oeis", help="export b-files or cross-check against fixtures")
    e.add_argument("action", choices=["export", "check"])
    e.add_argument("--kind", choices=kinds)
    e.add_argument("--k", type=int)
    e.add_argument("--count", type=int)
    e.add_argument("--offset", type=int)
    e.add_argument("--output")
    e.add_argument("--rule")
    e.add_argument("--all", action="store_true")
    e.add_argument("--fixtures", help=f"fixture directory (default: ${oeis_io.FIXTURES_ENV} or bundled)")
    e.add_argument("--fetch", action="store_true", help="allow downloading missing b-files")
    e.add_argument("--json", action="store_true")
    e.add_argument("--verbose", action="store_true", help="print every compared index")
    e.set_defaults(func=cmd_oeis)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"schreier: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, oeis_io.BFileParseError) as exc:
        print(f"schreier: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except oeis_io.WindowOutOfRange as exc:
        print(f"schreier: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
