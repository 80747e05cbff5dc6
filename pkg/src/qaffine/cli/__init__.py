"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from ..coproduct import READINGS, c_coeff_closed, c_coeff_recursive, delta_closed, power_closed
from ..morphisms import delta_recursive
from ..scalar import ScalarQ
from ..verify import SUITES, run_suite
from .parser import ParseError, parse, evaluate
from .render import FORMATS, render

__all__ = ["main", "build_parser"]


def _format_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output format")
    return p


def build_parser() -> argparse.ArgumentParser:
    fmt = _format_parent()
    ap = argparse.ArgumentParser(
        prog="qaffine",
        description="Exact computations in U_q(sl2^) in Drinfeld generators.",
    )
    ap.add_argument("--format", choices=FORMATS, default="text", help="output format (default: text)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[fmt], help="normal-order an expression")
    p.add_argument("--expr", required=True, help="e.g. '[h[1], x[0]]' or 'y[0]*x[1]'")

    p = sub.add_parser("coproduct", parents=[fmt], help="coproduct of a loop generator")
    p.add_argument("--family", choices=("x", "y", "psi", "phi"), required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--method", choices=("closed", "recursive"), default="closed")
    p.add_argument(
        "--reading",
        choices=READINGS,
        default="corrected",
        help="closed form for y_N, N >= 2: literal printed formula or the corrected one",
    )

    p = sub.add_parser("power", parents=[fmt], help="closed-form power of X_0^+(z) or Y_0^+(z)")
    p.add_argument("--kind", choices=("X0plus", "Y0plus"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("c-coeff", parents=[fmt], help="coefficient c_{m_n..m_1}(q)")
    p.add_argument("--tuple", required=True, help="comma-separated, weakly increasing, e.g. 1,1,2")
    p.add_argument("--method", choices=("closed", "recursive"), default="closed")

    p = sub.add_parser("verify", parents=[fmt], help="run an identity suite")
    p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p.add_argument("--max-index", type=int, default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    return ap


def _usage_error(ap: argparse.ArgumentParser, msg: str) -> int:
    ap.print_usage(sys.stderr)
    print(f"qaffine: error: {msg}", file=sys.stderr)
    return 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2
    fmt = args.format

    if args.command == "normalize":
        try:
            value = evaluate(parse(args.expr))
        except ParseError as e:
            print(f"qaffine: parse error: {e.message} at offset {e.offset}", file=sys.stderr)
            return 2
        except ValueError as e:
            print(f"qaffine: error: {e}", file=sys.stderr)
            return 2
        print(render(value, fmt))
        return 0

    if args.command == "coproduct":
        fam, idx = args.family, args.index
        if (fam == "psi" and idx < 0) or (fam == "phi" and idx > 0):
            return _usage_error(ap, f"{fam} index out of range")
        if args.method == "closed":
            value = delta_closed(fam, idx, args.reading)
        else:
            value = delta_recursive(fam, idx)
        print(render(value, fmt))
        return 0

    if args.command == "power":
        if args.n < 1 or args.order < 0:
            return _usage_error(ap, "need --n >= 1 and --order >= 0")
        print(render(power_closed(args.kind, args.n, args.order), fmt))
        return 0

    if args.command == "c-coeff":
        try:
            t = tuple(int(v) for v in args.tuple.split(",") if v.strip())
            value = c_coeff_closed(t) if args.method == "closed" else c_coeff_recursive(t)
        except ValueError as e:
            return _usage_error(ap, f"bad tuple: {e}")
        if fmt == "json":
            print(json.dumps({"tuple": list(t), "method": args.method, "value": ScalarQ(value).to_json()}, sort_keys=True))
        else:
            print(render(value, fmt))
        return 0

    # verify
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(n, args.max_index, args.order, args.seed) for n in names]
    if fmt == "json":
        out = [r.to_json() for r in reports]
        print(json.dumps(out[0] if len(out) == 1 else out, sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures:
                print(f"  FAIL {f.case}: {f.first_difference}")
            for note in r.notes:
                print(f"  note: {note}")
    return 0 if all(r.passed for r in reports) else 1


def run() -> None:
    sys.exit(main())
