"""Command-line front end: ``qhs compute``, ``qhs verify`` and ``qhs table``.

Exit codes: 0 success, 1 unexpected mismatch, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .cyclotomic import CycElem, cyc_to_complex
from .exact import format_rational, parse_rational
from .harmonic import (
    BruteForceCapError,
    DEFAULT_BRUTE_CAP,
    QSpec,
    cyclic_sum_ones,
    cyclic_sum_twos,
    zq_bruteforce,
    zq_dp,
)
from .verify import SUITES, Grid, dumps, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> range:
    """``"5"`` or ``"2..10"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from None
    if hi_i < lo_i:
        raise UsageError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


def parse_indices(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        s = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad index list {text!r}") from None
    bad = [x for x in s if x < 1]
    if bad:
        raise UsageError(f"index entries must be >= 1, got {bad[0]}")
    return s


def _default_jobs() -> int:
    env = os.environ.get("QHS_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qhs", description="Exact q-multiple harmonic sums at roots of unity.")
    p.add_argument("--version", action="version", version=f"qhs {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    pc = sub.add_parser("compute", help="evaluate one sum exactly")
    pc.add_argument("--n", type=int, help="root-of-unity order; indices run over 1..n-1")
    pc.add_argument("--q", type=str, help='rational q such as "1/2" (rational mode)')
    pc.add_argument("--upper", type=int, help="with --q: the n of Z_n, indices run over 1..upper-1")
    pc.add_argument("--indices", required=True, help='comma separated exponents, e.g. "1,2,1"')
    pc.add_argument("--method", choices=("dp", "brute"), default="dp")
    pc.add_argument("--cap", type=int, default=DEFAULT_BRUTE_CAP, help="tuple cap for --method brute")
    pc.add_argument("--format", choices=("text", "json"), default="text")

    pv = sub.add_parser("verify", help="run a verification suite over a parameter grid")
    pv.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES)}, all")
    pv.add_argument("--max-n", type=int, default=Grid.max_n)
    pv.add_argument("--max-m", type=int, default=Grid.max_m)
    pv.add_argument("--max-A", dest="max_A", type=int, default=Grid.max_A)
    pv.add_argument("--max-s", type=int, default=Grid.max_s)
    pv.add_argument("--jobs", type=int, default=None, help="worker processes (env QHS_JOBS)")
    pv.add_argument("--format", choices=("json", "csv", "text"), default="text")
    pv.add_argument("--out", type=str, default=None)

    pt = sub.add_parser("table", help="print a grid of exact values")
    pt.add_argument("--what", choices=("zeta-single", "F", "R"), required=True)
    pt.add_argument("--n", default="2..10", help="N or A..B")
    pt.add_argument("--s", default="1..4", help="exponent range for zeta-single")
    pt.add_argument("--A", dest="A", default="2", help="distinguished exponent for F and R")
    pt.add_argument("--m", default="1..3", help="depth range for F and R")
    pt.add_argument("--format", choices=("text", "csv", "json"), default="text")
    return p


def _render_value(v) -> dict:
    if isinstance(v, CycElem):
        out = {"value": v.to_json(), "rational": v.is_rational()}
        if v.is_rational():
            out["exact"] = format_rational(v.coeffs[0])
        z = cyc_to_complex(v)
        out["advisory_float"] = [z.real, z.imag]
        return out
    return {"exact": format_rational(v), "rational": True}


def cmd_compute(args, out) -> int:
    s = parse_indices(args.indices)
    if args.q is not None:
        if args.upper is None:
            raise UsageError("--q requires --upper")
        try:
            spec = QSpec.rational(parse_rational(args.q), args.upper)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(str(exc)) from None
    else:
        if args.n is None or args.n < 2:
            raise UsageError("--n must be given and >= 2 (or use --q with --upper)")
        spec = QSpec.root(args.n)
    try:
        if args.method == "brute":
            value = zq_bruteforce(spec, s, cap=args.cap)
        else:
            value = zq_dp(spec, s)
    except BruteForceCapError as exc:
        print(f"qhs: {exc}", file=sys.stderr)
        return EXIT_CAP
    info = _render_value(value)
    if args.format == "json":
        payload = {"n": spec.n, "indices": list(s), "method": args.method, **info}
        if not spec.is_root:
            payload["q"] = format_rational(spec.q)
        out.write(dumps(payload))
    elif "exact" in info:
        out.write(info["exact"] + "\n")
    else:
        coeffs = ", ".join(info["value"]["coeffs"])
        re, im = info["advisory_float"]
        out.write(f"coeffs (basis 1, z, z^2, ...; z = exp(2 pi i/{spec.n})): [{coeffs}]\n")
        out.write(f"advisory float: {re:.15g} {im:+.15g}i\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    if args.max_n < 2 or args.max_m < 1 or args.max_A < 1 or args.max_s < 1:
        raise UsageError("grid bounds need max-n >= 2 and max-m, max-A, max-s >= 1")
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    grid = Grid(max_n=args.max_n, max_m=args.max_m, max_A=args.max_A, max_s=args.max_s)
    report = run_suite(args.suite, grid, jobs=max(1, jobs))
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    if report.ok:
        return EXIT_OK
    for c in report.failures():
        print(f"FAIL {c['suite']}/{c['check']} {c['params']}: lhs={c['lhs']} rhs={c['rhs']}"
              + (f" ({c['error']})" if "error" in c else ""), file=sys.stderr)
    for t in report.unreproduced_typos:
        print(f"FAIL suspected typo {t['check']} no longer mismatches at {t['params']}", file=sys.stderr)
    return EXIT_MISMATCH


def _table_rows(args) -> tuple[list[str], list[list]]:
    ns = parse_range(args.n)
    if args.what == "zeta-single":
        ss = parse_range(args.s)
        if ss.start < 1 or ns.start < 2:
            raise UsageError("need n >= 2 and s >= 1")
        header = ["n"] + [f"s={s}" for s in ss]
        rows = [[n] + [zq_dp(n, (s,)).coeffs[0] for s in ss] for n in ns]
        return header, rows
    As, ms = parse_range(args.A), parse_range(args.m)
    if ms.start < 1 or As.start < 1 or ns.start < 2:
        raise UsageError("need n >= 2, A >= 1 and m >= 1")
    fn = cyclic_sum_ones if args.what == "F" else cyclic_sum_twos
    header = ["n", "A"] + [f"m={m}" for m in ms]
    rows = [[n, A] + [fn(n, A, m) for m in ms] for n in ns for A in As]
    return header, rows


def cmd_table(args, out) -> int:
    header, rows = _table_rows(args)
    cells = [[format_rational(x) if isinstance(x, Fraction) else str(x) for x in r] for r in rows]
    if args.format == "json":
        out.write(dumps({"what": args.what, "header": header, "rows": cells}))
    elif args.format == "csv":
        out.write(",".join(header) + "\n")
        for r in cells:
            out.write(",".join(r) + "\n")
    else:
        widths = [max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(header)]
        out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
        for r in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {"compute": cmd_compute, "verify": cmd_verify, "table": cmd_table}
    try:
        return handlers[args.cmd](args, out)
    except UsageError as exc:
        print(f"qhs: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
