"""Command-line front end: reference tables, curve samples, and ad-hoc queries.

Exit codes: 0 success, 2 usage or invalid parameters, 3 data errors,
4 solver failures.
"""

from __future__ import annotations

import argparse
import sys

from . import tables
from .cola_data import ParseError, RangeError
from .solvers import NoBracketError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_SOLVER = 4


def _sweep_values(text: str) -> list[float]:
    """Parse a single float or an inclusive 'lo:hi:step' sweep."""
    if ":" not in text:
        return [float(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"sweep must be 'lo:hi:step', got {text!r}")
    lo, hi, step = (float(part) for part in parts)
    if step <= 0 or hi < lo:
        raise ValueError(f"bad sweep {text!r}: need lo <= hi and step > 0")
    values = []
    i = 0
    while True:
        value = lo + i * step
        if value > hi + 1e-12 * max(1.0, abs(hi)):
            break
        values.append(value)
        i += 1
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sstiming",
        description="Break-even points, market-gain curves, and optimal claiming ages "
        "for Social Security benefits (rates are decimal fractions, e.g. 0.08).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p_break = sub.add_parser("breakeven", help="break-even years after 70 vs claiming at 70")
    p_break.add_argument("--p", type=float, default=tables.DEFAULT_P)
    p_break.add_argument("--q", type=float, action="append", dest="qs", metavar="Q")
    p_break.add_argument("--K", type=float, default=None)
    add_format(p_break)

    p_crit = sub.add_parser("critical", help="critical market rate r* and minimum-gain age")
    p_crit.add_argument("--p", type=float, default=tables.DEFAULT_P)
    p_crit.add_argument("--q", type=float, action="append", dest="qs", metavar="Q")
    p_crit.add_argument("--K", type=float, default=None)
    add_format(p_crit)

    p_curve = sub.add_parser("gain-curve", help="sample a gain curve over years after 70")
    p_curve.add_argument("--K", type=float, default=1.0)
    p_curve.add_argument("--p", type=float, default=tables.DEFAULT_P)
    p_curve.add_argument("--q", type=float, default=0.025)
    p_curve.add_argument("--r", type=float, default=0.05)
    p_curve.add_argument("--from", dest="n_lo", type=float, default=1.0, metavar="N")
    p_curve.add_argument("--to", dest="n_hi", type=float, default=60.0, metavar="N")
    p_curve.add_argument("--step", type=float, default=1.0)
    add_format(p_curve)

    p_opt = sub.add_parser("optimize", help="optimal claiming offset K")
    p_opt.add_argument("--mode", choices=("maximin", "at-age"), required=True)
    p_opt.add_argument("--n", type=str, default=None, help="years after 70, or lo:hi:step")
    p_opt.add_argument("--r", type=str, default="0.05", help="market rate, or lo:hi:step")
    p_opt.add_argument("--p", type=float, default=tables.DEFAULT_P)
    p_opt.add_argument("--q", type=float, default=0.025)
    add_format(p_opt)

    p_cola = sub.add_parser("cola", help="geometric-average rate over a year window")
    p_cola.add_argument("--from", dest="from_year", type=int, required=True, metavar="YEAR")
    p_cola.add_argument("--to", dest="to_year", type=int, required=True, metavar="YEAR")
    p_cola.add_argument("--data-file", type=str, default=None)
    add_format(p_cola)

    return parser


def _dispatch(args: argparse.Namespace) -> dict:
    if args.command == "breakeven":
        if args.K is not None:
            qs = args.qs or [0.025]
            return tables.breakeven_point(args.K, args.p, qs[0])
        return tables.breakeven_table(args.p, args.qs)
    if args.command == "critical":
        if args.K is not None:
            qs = args.qs or [0.025]
            return tables.critical_point(args.K, args.p, qs[0])
        return tables.critical_table(args.p, args.qs)
    if args.command == "gain-curve":
        return tables.gain_curve_payload(
            args.K, args.p, args.q, args.r, args.n_lo, args.n_hi, args.step
        )
    if args.command == "optimize":
        rs = _sweep_values(args.r)
        ns = _sweep_values(args.n) if args.n is not None else None
        if args.mode == "at-age" and ns is None:
            raise ValueError("mode 'at-age' requires --n")
        if len(rs) > 1 and ns is not None and len(ns) > 1:
            raise ValueError("sweep either --r or --n, not both")
        if len(rs) > 1:
            return tables.optimize_sweep_payload(
                args.mode, args.p, args.q, rs=rs, n=ns[0] if ns else None
            )
        if ns is not None and len(ns) > 1:
            return tables.optimize_sweep_payload(args.mode, args.p, args.q, ns=ns, r=rs[0])
        return tables.optimize_payload(
            args.mode, args.p, args.q, rs[0], ns[0] if ns else None
        )
    if args.command == "cola":
        return tables.cola_average_payload(args.from_year, args.to_year, args.data_file)
    raise ValueError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        payload = _dispatch(args)
    except (ParseError, RangeError, OSError) as exc:
        print(f"sstiming: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NoBracketError as exc:
        print(f"sstiming: solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except ValueError as exc:
        print(f"sstiming: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(tables.RENDERERS[args.format](payload))
    return EXIT_OK


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
