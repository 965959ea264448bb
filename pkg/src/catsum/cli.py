"""Command-line front end.

Exit status: 0 when everything selected passes, 1 on a genuine claim
failure, 2 on a usage error, 3 when some verdict is inconclusive at the
precision cap (and nothing failed outright).

Decimal rendering is fixed so output files are reproducible: interval
endpoints get 12 significant digits, rounded outward; midpoints get 9
significant digits, computed from the two rendered endpoints with
round-half-even.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from decimal import ROUND_CEILING, ROUND_FLOOR, ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

import gmpy2

from . import bounds, exact, series, verify
from .interval import RealInterval, _contexts
from .report import VerificationReport

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

PRECISION_ENV = "CATSUM_PRECISION"

ENDPOINT_DIGITS = 12
MID_DIGITS = 9

COMMANDS = ("exact", "bounds", "verify", "ratios", "figures", "series")
CLAIMS = ("thm1", "thm2", "lemma1", "lemma2", "lemma3", "catalan_bounds", "recurrence")

DEFAULT_RANGES = {
    "exact": (1, 20),
    "bounds": (1, 20),
    "ratios": (8, 50),
    "fig1": (8, 50),
    "fig2": (8, 50),
    "fig3": (1, 50),
    "thm1": (1, 1000),
    "thm2": (8, 1000),
    "lemma1": (2, 1000),
    "lemma2": (13, 10**4),
    "lemma3": (1, 10**4),
    "catalan_bounds": (1, 2000),
    "recurrence": (3, 10**4),
}


# -- decimal rendering ------------------------------------------------------


def _decimal(x: gmpy2.mpfr, rounding: str) -> str:
    down = rounding == ROUND_FLOOR
    # 64-bit directed pre-rounding keeps the integer ratio small; rounding
    # twice in the same direction is still outward
    x64 = _contexts(64)[0 if down else 1].plus(x)
    num, den = (int(v) for v in x64.as_integer_ratio())
    ctx = Context(prec=ENDPOINT_DIGITS, rounding=rounding)
    return str(ctx.divide(Decimal(num), Decimal(den)))


def render_lo(iv: RealInterval) -> str:
    return _decimal(iv.lo, ROUND_FLOOR)


def render_hi(iv: RealInterval) -> str:
    return _decimal(iv.hi, ROUND_CEILING)


def render_mid(lo: str, hi: str) -> str:
    total = Context(prec=2 * ENDPOINT_DIGITS + 10).add(Decimal(lo), Decimal(hi))
    return str(Context(prec=MID_DIGITS, rounding=ROUND_HALF_EVEN).divide(total, 2))


def interval_cells(iv: RealInterval) -> tuple[str, str, str]:
    lo, hi = render_lo(iv), render_hi(iv)
    return lo, hi, render_mid(lo, hi)


def fraction_str(q: Fraction) -> str:
    """``"n/d"``, or just ``"n"`` for integers."""
    return str(Fraction(q))


# -- table output -----------------------------------------------------------


def write_table(header: list[str], rows: list[list], fmt: str, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        json.dump([dict(zip(header, r)) for r in rows], out, indent=2)
        out.write("\n")


def _prec(args, n: int) -> int:
    return args.precision or bounds.default_precision(n)


def cmd_exact(args, out) -> int:
    lo, hi = args.range
    rows = [
        [n, str(exact.catalan(n)), str(exact.sum_catalan(n)), fraction_str(exact.ell(n))]
        for n in range(lo, hi + 1)
    ]
    write_table(["n", "C_n", "S_n", "ell_n"], rows, args.format, out)
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    lo, hi = args.range
    kinds = [bounds.BoundKind(k) for k in args.kinds]
    header = ["n"]
    for k in kinds:
        header += [f"{k.value}_log2"] if args.log2_only else [f"{k.value}_lo", f"{k.value}_hi", f"{k.value}_mid"]
    rows = []
    for n in range(lo, hi + 1):
        row: list = [n]
        for k in kinds:
            if args.log2_only:
                row.append(repr(bounds.log2_estimate(k, n)))
            else:
                row += interval_cells(bounds.eval_bound(k, n, _prec(args, n)))
        rows.append(row)
    write_table(header, rows, args.format, out)
    return EXIT_OK


def _ratio_rows(args, lo: int, hi: int) -> list[verify.RatioRecord]:
    return verify.difference_table(lo, hi, args.precision)


def cmd_ratios(args, out) -> int:
    lo, hi = args.range
    header = ["n"]
    for name in ("delta", "zeta", "u_minus_S", "S_minus_theta", "mu_minus_S"):
        header += [f"{name}_lo", f"{name}_hi", f"{name}_mid"]
    header.append("S_minus_Cn")
    rows = []
    for rec in _ratio_rows(args, lo, hi):
        row: list = [rec.n]
        for iv in (rec.delta, rec.zeta, rec.diff_u, rec.diff_theta, rec.diff_mu):
            row += interval_cells(iv)
        row.append(str(rec.diff_cn))
        rows.append(row)
    write_table(header, rows, args.format, out)
    return EXIT_OK


def cmd_figures(args, out) -> int:
    lo, hi = args.range
    records = _ratio_rows(args, lo, hi)
    if args.which in ("fig1", "fig2"):
        name = "delta" if args.which == "fig1" else "zeta"
        header = ["n", f"{name}_lo", f"{name}_hi", f"{name}_mid"]
        rows = [[r.n, *interval_cells(getattr(r, name))] for r in records]
    else:
        header = ["n", "u_minus_S", "S_minus_theta", "mu_minus_S", "S_minus_Cn"]
        rows = [
            [r.n, *(interval_cells(iv)[2] for iv in (r.diff_u, r.diff_theta, r.diff_mu)), str(r.diff_cn)]
            for r in records
        ]
    write_table(header, rows, args.format, out)
    return EXIT_OK


def run_claim(claim: str, lo: int, hi: int) -> list[VerificationReport]:
    if claim == "thm1":
        return [verify.verify_thm1(hi, n_lo=lo)]
    if claim == "thm2":
        return [verify.verify_thm2(lo, hi)]
    if claim == "lemma1":
        return [exact.verify_lemma1(lo, hi)]
    if claim == "lemma2":
        return [verify.lemma2_polynomial_identity(max(hi, 13)), verify.lemma2_base_cases()]
    if claim == "lemma3":
        return [verify.lemma3_reduction(hi)]
    if claim == "catalan_bounds":
        return [verify.verify_catalan_bounds(hi, k_lo=lo)]
    if claim == "recurrence":
        return [exact.verify_sum_recurrence(max(hi, 3))]
    raise ValueError(f"unknown claim {claim!r}")


def cmd_verify(args, out) -> int:
    reports: list[VerificationReport] = []
    for claim in dict.fromkeys(args.claims):
        lo, hi = args.range or DEFAULT_RANGES[claim]
        reports.extend(run_claim(claim, lo, hi))
    json.dump([r.to_dict() for r in reports], out, indent=2)
    out.write("\n")
    for r in reports:
        print(f"{r.claim_id} [{r.range[0]}, {r.range[1]}]: {r.status}"
              f" ({len(r.violations)} violated, {len(r.inconclusive)} inconclusive)", file=sys.stderr)
    if any(r.violations for r in reports):
        return EXIT_FAIL
    if any(r.inconclusive for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_series(args, out) -> int:
    try:
        exp = series.solve_expansion(args.base, args.p)
    except series.SeriesError as exc:
        print(f"series: {exc}", file=sys.stderr)
        return EXIT_FAIL
    doc = {"base": exp.base, "p": exp.order, "coefficients": [fraction_str(c) for c in exp.coeffs]}
    json.dump(doc, out, indent=2)
    out.write("\n")
    return EXIT_OK


# -- argument parsing -------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _precision(text: str) -> int:
    value = int(text)
    if value < bounds.MIN_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must be >= {bounds.MIN_PRECISION} bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catsum",
        description="Exact sums of Catalan numbers and rigorous checks of their closed-form bounds.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--range", nargs=2, type=_positive, metavar=("LO", "HI"))
    common.add_argument(
        "--precision", type=_precision, metavar="BITS",
        help=f"working precision (default: max(128, 2n+64), or ${PRECISION_ENV})",
    )
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="PATH", help="write here instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("exact", parents=[common], help="C_n, S_n and 4C_n/3")
    p = sub.add_parser("bounds", parents=[common], help="enclosures of the closed-form estimators")
    p.add_argument("--kinds", nargs="+", default=["upper_u", "lower_theta", "mean_mu"],
                   choices=[k.value for k in bounds.BoundKind])
    p.add_argument("--log2-only", action="store_true", help="fast double-precision log2 values instead")
    p = sub.add_parser("verify", parents=[common], help="verify claims, write JSON reports")
    p.add_argument("claims", nargs="+", choices=CLAIMS)
    sub.add_parser("ratios", parents=[common], help="delta, zeta and the difference table")
    p = sub.add_parser("figures", parents=[common], help="figure data as CSV")
    p.add_argument("which", choices=("fig1", "fig2", "fig3"))
    p = sub.add_parser("series", parents=[common], help="exact asymptotic-series coefficients")
    p.add_argument("--base", choices=series.BASES, default="upper")
    p.add_argument("--p", type=int, default=1, metavar="ORDER")
    return parser


HANDLERS = {
    "exact": cmd_exact,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "ratios": cmd_ratios,
    "figures": cmd_figures,
    "series": cmd_series,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.precision is None and os.environ.get(PRECISION_ENV):
        try:
            args.precision = _precision(os.environ[PRECISION_ENV])
        except (ValueError, argparse.ArgumentTypeError) as exc:
            parser.error(f"${PRECISION_ENV}: {exc}")
    if args.range is not None and args.range[0] > args.range[1]:
        parser.error(f"--range: LO must not exceed HI, got {args.range[0]} > {args.range[1]}")
    if args.command == "series" and args.p < 0:
        parser.error("--p must be >= 0")
    if args.range is None and args.command not in ("verify", "series"):
        key = args.which if args.command == "figures" else args.command
        args.range = DEFAULT_RANGES[key]

    buf = io.StringIO()
    status = HANDLERS[args.command](args, buf)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return status


if __name__ == "__main__":
    sys.exit(main())
