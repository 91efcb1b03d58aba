"""Command-line front end.

Commands: check, scan, conjecture1, conjecture2, bounds, prime-powers,
substitute.  Exit codes: 0 satisfied/empty, 1 violated/counterexample
found, 2 indeterminate, 64 usage error, 65 raw input too large to
factor (use a factor string).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional, TextIO

from . import explorer, primes, robin, theorems
from .factorization import Factorization
from .intervals import PrecisionConfig, RealInterval, interval_from_fractions
from .output import (
    interval_cell,
    interval_json,
    interval_sig,
    sig_str_fraction,
    sig_str_dyadic,
    sig_str_num_den,
)
from .robin import Verdict

EXIT_SATISFIED = 0
EXIT_VIOLATED = 1
EXIT_INDETERMINATE = 2
EXIT_USAGE = 64
EXIT_TOO_LARGE = 65

_VERDICT_EXIT = {
    Verdict.SATISFIED: EXIT_SATISFIED,
    Verdict.VIOLATED: EXIT_VIOLATED,
    Verdict.INDETERMINATE: EXIT_INDETERMINATE,
}

_N_PRINT_DIGITS = 50  # larger n are reported as log10(n)

_DEFAULT_LOG_N_MAX = "27.631021"  # ln(10^12)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-bits", type=int, default=53,
                        help="starting interval precision (default 53)")
    common.add_argument("--max-precision-bits", type=int, default=4096,
                        help="escalation ceiling (default 4096)")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes for range/search commands")
    common.add_argument("--format", choices=("human", "csv", "json", "svg"),
                        default="human")
    common.add_argument("--output", default="-",
                        help="output path (default: standard output)")

    parser = _Parser(prog="robincheck",
                     description="Certified checks of the sigma(n) < "
                                 "e^gamma n log log n inequality")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common],
                       help="check one n or factor string")
    p.add_argument("value", help="decimal integer >= 2 or factor string like 2^4*3^2*5*7")

    p = sub.add_parser("scan", parents=[common],
                       help="check every n in a range, streaming violations")
    p.add_argument("start", type=int)
    p.add_argument("end", type=int)

    p = sub.add_parser("conjecture1", parents=[common],
                       help="primorial partial-product table (q_m vs alpha_m)")
    p.add_argument("m_max", type=int)

    p = sub.add_parser("conjecture2", parents=[common],
                       help="bounded exponent-increment counterexample search")
    p.add_argument("--primes", type=int, default=9, dest="prime_count")
    p.add_argument("--max-exp", type=int, default=6)
    p.add_argument("--max-log-n", default=_DEFAULT_LOG_N_MAX,
                   help="upper bound on ln n (decimal, default ln 10^12)")
    p.add_argument("--no-prune-justification", action="store_true",
                   help="allow --primes beyond 9 (outside the corollary-backed range)")
    p.add_argument("--all-arrangements", action="store_true",
                   help="disable the non-increasing-exponent restriction")

    p = sub.add_parser("bounds", parents=[common],
                       help="corollary bound table vs e^gamma ln ln 5040")
    p.add_argument("m_max", type=int)

    p = sub.add_parser("prime-powers", parents=[common],
                       help="verify every prime power in (5040, limit]")
    p.add_argument("--limit", type=int, default=10 ** 6)

    p = sub.add_parser("substitute", parents=[common],
                       help="one-shot prime substitution report")
    p.add_argument("factors", help="base factor string")
    p.add_argument("index", type=int, help="0-based entry to replace")
    p.add_argument("new_prime", type=int)
    return parser


def _make_cfg(args) -> PrecisionConfig:
    return PrecisionConfig(start_bits=args.precision_bits,
                           max_bits=args.max_precision_bits)


def _open_output(args) -> TextIO:
    if args.output == "-":
        return sys.stdout
    return open(args.output, "w")


def _n_display(f: Factorization) -> tuple[Optional[str], Optional[str]]:
    """(n, log10_n): exactly one is set, depending on the size of n."""
    if f.log2_magnitude() <= 4 * _N_PRINT_DIGITS:
        n = f.n()
        s = str(n)
        if len(s) <= _N_PRINT_DIGITS:
            return s, None
        log10 = _log10_interval(f)
        return None, sig_str_fraction(log10.midpoint())
    return None, sig_str_fraction(_log10_interval(f).midpoint())


def _log10_interval(f: Factorization) -> RealInterval:
    lnn = robin.log_n(f, 53)
    ln10 = robin.log_n(Factorization(((2, 1), (5, 1)),), 53)
    return interval_from_fractions(
        lnn.lo.as_fraction() / ln10.hi.as_fraction(),
        lnn.hi.as_fraction() / ln10.lo.as_fraction(),
        53,
    )


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def _cmd_check(args, out: TextIO) -> int:
    cfg = _make_cfg(args)
    value = args.value.strip()
    too_large = False
    if re.fullmatch(r"\d+", value):
        n = int(value)
        if n < 2:
            raise _UsageError("n must be >= 2")
        if n > primes.MAX_FACTOR_INPUT:
            too_large = True
            f = None
        else:
            f = primes.factorize(n)
    else:
        try:
            f = primes.parse_factor_string(value)
        except (primes.ParseError, primes.NotPrime, primes.DuplicateBase,
                primes.ZeroExponent) as exc:
            raise _UsageError(str(exc))
    if too_large:
        print(f"{value} exceeds the raw-integer range; "
              "supply its factorization as a factor string (p^k*q^j*...)",
              file=sys.stderr)
        return EXIT_TOO_LARGE

    result = robin.check(f, cfg)
    n_str, log10_str = _n_display(f)
    margin = (result.margin_lower_bound.decimal_str()
              if result.margin_lower_bound is not None else "")
    rhs_lo, rhs_hi = interval_cell(result.rhs)

    if args.format == "csv":
        out.write("n,log10_n,factorization,sigma_over_n_num,sigma_over_n_den,"
                  "rhs_lo,rhs_hi,verdict,reason,margin_lower_bound,precision_bits\n")
        out.write(",".join([
            n_str or "", log10_str or "", f.as_string(),
            str(result.lhs.numerator), str(result.lhs.denominator),
            rhs_lo if result.rhs else "", rhs_hi if result.rhs else "",
            result.verdict.value, result.reason or "", margin,
            str(result.precision_used),
        ]) + "\n")
    elif args.format == "json":
        json.dump({
            "n": n_str,
            "log10_n": log10_str,
            "factorization": f.as_string(),
            "sigma_over_n": {"num": str(result.lhs.numerator),
                             "den": str(result.lhs.denominator)},
            "rhs": interval_json(result.rhs),
            "verdict": result.verdict.value,
            "reason": result.reason,
            "margin_lower_bound": margin or None,
            "precision_bits": result.precision_used,
        }, out, indent=2)
        out.write("\n")
    else:
        if n_str is not None:
            out.write(f"n = {n_str}\n")
        else:
            out.write(f"log10(n) = {log10_str}\n")
        out.write(f"factorization = {f.as_string()}\n")
        out.write(f"sigma(n)/n = {result.lhs.numerator}/{result.lhs.denominator}"
                  f" = {sig_str_fraction(result.lhs)}\n")
        if result.rhs is not None:
            out.write(f"rhs (e^gamma log log n) = {interval_sig(result.rhs)}\n")
        else:
            out.write("rhs (e^gamma log log n) = undefined (n <= e)\n")
        out.write(f"verdict = {result.verdict.value}\n")
        if result.reason:
            out.write(f"reason = {result.reason}\n")
        if result.margin_lower_bound is not None:
            out.write(f"margin >= {sig_str_dyadic(result.margin_lower_bound)}\n")
        out.write(f"precision = {result.precision_used} bits\n")
    return _VERDICT_EXIT[result.verdict]


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

SCAN_CSV_HEADER = "n,sigma,sigma_over_n_num,sigma_over_n_den,rhs_lo,rhs_hi,reason"


def scan_violation_row(n: int, result: robin.CheckResult) -> str:
    sig = robin.sigma(result.factorization)
    rhs_lo = result.rhs.lo.decimal_str() if result.rhs is not None else ""
    rhs_hi = result.rhs.hi.decimal_str() if result.rhs is not None else ""
    return (f"{n},{sig},{result.lhs.numerator},{result.lhs.denominator},"
            f"{rhs_lo},{rhs_hi},{result.reason or ''}")


def _cmd_scan(args, out: TextIO) -> int:
    if args.start < 2 or args.start > args.end:
        raise _UsageError("need 2 <= start <= end")
    cfg = _make_cfg(args)
    violations = 0
    indeterminates: list[int] = []
    rows_json = []
    if args.format == "csv":
        out.write(SCAN_CSV_HEADER + "\n")
    for viol, indet in explorer.iter_scan_results(
            args.start, args.end, cfg, worker_count=args.jobs):
        for n, result in viol:
            violations += 1
            if args.format == "json":
                rows_json.append({
                    "n": n,
                    "sigma": str(robin.sigma(result.factorization)),
                    "sigma_over_n": {"num": str(result.lhs.numerator),
                                     "den": str(result.lhs.denominator)},
                    "rhs": interval_json(result.rhs),
                    "reason": result.reason,
                })
            elif args.format == "csv":
                out.write(scan_violation_row(n, result) + "\n")
            else:
                out.write(f"VIOLATED n={n} sigma/n="
                          f"{result.lhs.numerator}/{result.lhs.denominator}"
                          f" ({sig_str_fraction(result.lhs)})"
                          + (f" rhs={interval_sig(result.rhs)}"
                             if result.rhs else " rhs=undefined") + "\n")
        indeterminates.extend(indet)
    checked = args.end - args.start + 1
    summary = (f"checked={checked} violations={violations} "
               f"indeterminates={len(indeterminates)}")
    if args.format == "json":
        json.dump({
            "lo": args.start, "hi": args.end, "checked": checked,
            "violations": rows_json,
            "indeterminates": indeterminates,
        }, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        print(summary, file=sys.stderr)
    else:
        out.write(summary + "\n")
    if violations:
        return EXIT_VIOLATED
    if indeterminates:
        return EXIT_INDETERMINATE
    return EXIT_SATISFIED


# ---------------------------------------------------------------------------
# conjecture1
# ---------------------------------------------------------------------------

CONJ1_CSV_HEADER = ("m,p_m,q_m_num,q_m_den,q_m_dec,alpha_lo,alpha_hi,"
                    "ratio_lo,ratio_hi,n_exceeds_5040")


def conjecture1_csv_row(row: explorer.ConjectureRow) -> str:
    alpha_lo, alpha_hi = interval_cell(row.alpha)
    ratio_lo, ratio_hi = interval_cell(row.ratio)
    return (f"{row.m},{row.p_m},{row.q_num},{row.q_den},"
            f"{sig_str_num_den(row.q_num, row.q_den)},"
            f"{alpha_lo},{alpha_hi},{ratio_lo},{ratio_hi},"
            f"{'true' if row.n_exceeds_5040 else 'false'}")


def _cmd_conjecture1(args, out: TextIO) -> int:
    if args.m_max < 1:
        raise _UsageError("m_max must be >= 1")
    cfg = _make_cfg(args)
    rows = explorer.conjecture31_table(args.m_max, cfg)
    if args.format == "svg":
        out.write(_conjecture1_svg(rows))
        return EXIT_SATISFIED
    if args.format == "json":
        json.dump({"rows": [{
            "m": r.m, "p_m": r.p_m,
            "q_m": {"num": str(r.q_num), "den": str(r.q_den)},
            "q_m_dec": sig_str_num_den(r.q_num, r.q_den),
            "alpha": interval_json(r.alpha),
            "ratio": interval_json(r.ratio),
            "n_exceeds_5040": r.n_exceeds_5040,
        } for r in rows]}, out, indent=2)
        out.write("\n")
        return EXIT_SATISFIED
    if args.format == "csv":
        out.write(CONJ1_CSV_HEADER + "\n")
        for r in rows:
            out.write(conjecture1_csv_row(r) + "\n")
        return EXIT_SATISFIED
    for r in rows:
        alpha = interval_sig(r.alpha) if r.alpha else "undefined"
        ratio = interval_sig(r.ratio) if r.ratio else "undefined"
        marker = "  [n > 5040]" if r.n_exceeds_5040 else ""
        out.write(f"m={r.m} p={r.p_m} "
                  f"q={sig_str_num_den(r.q_num, r.q_den)} "
                  f"alpha={alpha} ratio={ratio}{marker}\n")
    return EXIT_SATISFIED


def _conjecture1_svg(rows: list[explorer.ConjectureRow]) -> str:
    """Two polylines (q_m and alpha_m) over m, vertical marker at n > 5040."""
    width, height, pad = 800, 500, 60
    xs = [r.m for r in rows]
    q_vals = [r.q_num / r.q_den for r in rows]
    a_pts = [(r.m, float(r.alpha.midpoint())) for r in rows if r.alpha]
    y_max = max(q_vals + [v for _, v in a_pts] + [1.0]) * 1.05
    x_max = max(xs)

    def sx(m):
        return pad + (width - 2 * pad) * (m - 1) / max(1, x_max - 1)

    def sy(v):
        return height - pad - (height - 2 * pad) * v / y_max

    def polyline(points, color):
        pts = " ".join(f"{sx(m):.2f},{sy(v):.2f}" for m, v in points)
        return (f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                f'points="{pts}"/>')

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{pad}" y1="{height-pad}" x2="{width-pad}" '
        f'y2="{height-pad}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height-pad}" '
        f'stroke="black"/>',
        f'<text x="{width//2}" y="{height-pad//4}" text-anchor="middle" '
        f'font-size="13">m (number of primes)</text>',
        polyline(list(zip(xs, q_vals)), "#1f77b4"),
    ]
    if a_pts:
        parts.append(polyline(a_pts, "#d62728"))
    first_exceed = next((r.m for r in rows if r.n_exceeds_5040), None)
    if first_exceed is not None:
        x = sx(first_exceed)
        parts.append(f'<line x1="{x:.2f}" y1="{pad}" x2="{x:.2f}" '
                     f'y2="{height-pad}" stroke="#888" stroke-dasharray="4 3"/>')
        parts.append(f'<text x="{x+4:.2f}" y="{pad+14}" font-size="12" '
                     f'fill="#555">n &gt; 5040</text>')
    parts.append(f'<text x="{width-pad}" y="{pad}" text-anchor="end" '
                 f'font-size="12" fill="#1f77b4">q_m</text>')
    parts.append(f'<text x="{width-pad}" y="{pad+16}" text-anchor="end" '
                 f'font-size="12" fill="#d62728">alpha_m</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# conjecture2
# ---------------------------------------------------------------------------

def _cmd_conjecture2(args, out: TextIO) -> int:
    if args.prime_count < 1:
        raise _UsageError("--primes must be >= 1")
    if args.prime_count > 9 and not args.no_prune_justification:
        raise _UsageError(
            "--primes beyond 9 leaves the corollary-backed range; "
            "pass --no-prune-justification to proceed anyway")
    if args.max_exp < 1:
        raise _UsageError("--max-exp must be >= 1")
    try:
        log_n_max = Fraction(args.max_log_n)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"bad --max-log-n value {args.max_log_n!r}")
    if log_n_max <= 0:
        raise _UsageError("--max-log-n must be positive")
    cfg = _make_cfg(args)
    report = explorer.conjecture32_search(
        args.prime_count, args.max_exp, log_n_max, cfg,
        worker_count=args.jobs,
        non_increasing_only=not args.all_arrangements,
    )
    ce_rows = [{
        "base": f.as_string(), "index": j, "verdict": r.verdict.value,
    } for f, j, r in report.counterexamples]
    if args.format == "json":
        json.dump({
            "prime_count_max": report.prime_count_max,
            "exponent_max": report.exponent_max,
            "log_n_max": str(report.log_n_max),
            "candidates_enumerated": report.candidates_enumerated,
            "bases_probed": report.bases_probed,
            "counterexamples": ce_rows,
        }, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write("base,index,verdict\n")
        for row in ce_rows:
            out.write(f"{row['base']},{row['index']},{row['verdict']}\n")
        print(f"candidates={report.candidates_enumerated} "
              f"probed={report.bases_probed} "
              f"counterexamples={len(ce_rows)}", file=sys.stderr)
    else:
        out.write(f"candidates enumerated = {report.candidates_enumerated}\n")
        out.write(f"bases probed (satisfied, n > 5040) = {report.bases_probed}\n")
        out.write(f"counterexamples = {len(ce_rows)}\n")
        for row in ce_rows:
            out.write(f"  base {row['base']} index {row['index']} "
                      f"-> {row['verdict']}\n")
    return EXIT_VIOLATED if ce_rows else EXIT_SATISFIED


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

BOUNDS_CSV_HEADER = ("m,p_m,unbounded_num,unbounded_den,unbounded_dec,"
                     "unbounded_passes,squarefree_num,squarefree_den,"
                     "squarefree_dec,squarefree_passes,threshold_lo,threshold_hi")


def _cmd_bounds(args, out: TextIO) -> int:
    if args.m_max < 1:
        raise _UsageError("m_max must be >= 1")
    cfg = _make_cfg(args)
    thr = theorems.threshold_5040(cfg)
    rows = []
    for m in range(1, args.m_max + 1):
        u = theorems.unbounded_exponent_bound(m, cfg)
        s = theorems.squarefree_bound(m, cfg)
        rows.append((m, primes.nth_prime(m), u, s))
    if args.format == "json":
        json.dump({
            "threshold": interval_json(thr),
            "rows": [{
                "m": m, "p_m": p,
                "unbounded": {"num": str(u.bound_value.numerator),
                              "den": str(u.bound_value.denominator),
                              "dec": sig_str_fraction(u.bound_value),
                              "passes": u.passes},
                "squarefree": {"num": str(s.bound_value.numerator),
                               "den": str(s.bound_value.denominator),
                               "dec": sig_str_fraction(s.bound_value),
                               "passes": s.passes},
            } for m, p, u, s in rows],
        }, out, indent=2)
        out.write("\n")
        return EXIT_SATISFIED
    if args.format == "csv":
        out.write(BOUNDS_CSV_HEADER + "\n")
        for m, p, u, s in rows:
            out.write(",".join([
                str(m), str(p),
                str(u.bound_value.numerator), str(u.bound_value.denominator),
                sig_str_fraction(u.bound_value),
                "true" if u.passes else "false",
                str(s.bound_value.numerator), str(s.bound_value.denominator),
                sig_str_fraction(s.bound_value),
                "true" if s.passes else "false",
                thr.lo.decimal_str(), thr.hi.decimal_str(),
            ]) + "\n")
        return EXIT_SATISFIED
    out.write(f"threshold e^gamma*loglog(5040) = {interval_sig(thr)}\n")
    for m, p, u, s in rows:
        out.write(f"m={m} p={p} "
                  f"unbounded={sig_str_fraction(u.bound_value)} "
                  f"({'pass' if u.passes else 'FAIL'}) "
                  f"squarefree={sig_str_fraction(s.bound_value)} "
                  f"({'pass' if s.passes else 'FAIL'})\n")
    return EXIT_SATISFIED


# ---------------------------------------------------------------------------
# prime-powers
# ---------------------------------------------------------------------------

def _cmd_prime_powers(args, out: TextIO) -> int:
    if args.limit <= 5040:
        raise _UsageError("--limit must exceed 5040")
    cfg = _make_cfg(args)
    results = theorems.verify_prime_powers(args.limit, cfg)
    not_satisfied = [r for r in results if r.verdict is not Verdict.SATISFIED]
    if args.format == "csv":
        out.write("n,p,k,lhs_num,lhs_den,rhs_lo,rhs_hi,verdict\n")
        for r in results:
            p, k = r.factorization.entries[0]
            rhs_lo, rhs_hi = interval_cell(r.rhs)
            out.write(f"{p**k},{p},{k},{r.lhs.numerator},{r.lhs.denominator},"
                      f"{rhs_lo},{rhs_hi},{r.verdict.value}\n")
    elif args.format == "json":
        json.dump({
            "limit": args.limit,
            "checked": len(results),
            "all_satisfied": not not_satisfied,
            "exceptions": [{
                "factorization": r.factorization.as_string(),
                "verdict": r.verdict.value,
            } for r in not_satisfied],
        }, out, indent=2)
        out.write("\n")
    else:
        out.write(f"prime powers in (5040, {args.limit}]: {len(results)} checked\n")
        out.write(f"all satisfied: {'yes' if not not_satisfied else 'NO'}\n")
        for r in not_satisfied:
            out.write(f"  {r.factorization.as_string()} -> {r.verdict.value}\n")
    if not not_satisfied:
        return EXIT_SATISFIED
    if any(r.verdict is Verdict.VIOLATED for r in not_satisfied):
        return EXIT_VIOLATED
    return EXIT_INDETERMINATE


# ---------------------------------------------------------------------------
# substitute
# ---------------------------------------------------------------------------

def _cmd_substitute(args, out: TextIO) -> int:
    cfg = _make_cfg(args)
    try:
        f = primes.parse_factor_string(args.factors)
    except (primes.ParseError, primes.NotPrime, primes.DuplicateBase,
            primes.ZeroExponent) as exc:
        raise _UsageError(str(exc))
    try:
        report = theorems.substitution_report(f, args.index, args.new_prime, cfg)
    except (theorems.NotAnIncrease, theorems.CollidingBase,
            primes.NotPrime, IndexError) as exc:
        raise _UsageError(str(exc))
    if args.format == "json":
        json.dump({
            "before": {"factorization": report.before.factorization.as_string(),
                       "verdict": report.before.verdict.value},
            "after": {"factorization": report.after.factorization.as_string(),
                      "verdict": report.after.verdict.value},
            "index": report.index,
            "old_prime": report.old_prime,
            "new_prime": report.new_prime,
            "lhs_decreased": report.lhs_decreased,
            "rhs_increased": report.rhs_increased,
        }, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write("before,before_verdict,after,after_verdict,index,old_prime,"
                  "new_prime,lhs_decreased,rhs_increased\n")
        out.write(",".join([
            report.before.factorization.as_string(),
            report.before.verdict.value,
            report.after.factorization.as_string(),
            report.after.verdict.value,
            str(report.index), str(report.old_prime), str(report.new_prime),
            "true" if report.lhs_decreased else "false",
            "true" if report.rhs_increased else "false",
        ]) + "\n")
    else:
        out.write(f"before: {report.before.factorization.as_string()} "
                  f"-> {report.before.verdict.value}\n")
        out.write(f"after:  {report.after.factorization.as_string()} "
                  f"-> {report.after.verdict.value}\n")
        out.write(f"replaced p={report.old_prime} with P={report.new_prime} "
                  f"at index {report.index}\n")
        out.write(f"lhs strictly decreased: {report.lhs_decreased}\n")
        out.write(f"rhs (log n) certified increased: {report.rhs_increased}\n")
    return _VERDICT_EXIT[report.after.verdict]


_COMMANDS = {
    "check": _cmd_check,
    "scan": _cmd_scan,
    "conjecture1": _cmd_conjecture1,
    "conjecture2": _cmd_conjecture2,
    "bounds": _cmd_bounds,
    "prime-powers": _cmd_prime_powers,
    "substitute": _cmd_substitute,
}

_SVG_COMMANDS = {"conjecture1"}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.format == "svg" and args.command not in _SVG_COMMANDS:
            raise _UsageError(
                f"--format svg is only valid for: {', '.join(sorted(_SVG_COMMANDS))}")
        try:
            _make_cfg(args)
        except ValueError as exc:
            raise _UsageError(str(exc))
        if args.jobs < 1:
            raise _UsageError("--jobs must be >= 1")
        out = _open_output(args)
        try:
            return _COMMANDS[args.command](args, out)
        finally:
            if out is not sys.stdout:
                out.close()
    except _UsageError as exc:
        print(f"robincheck: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except primes.InputTooLarge as exc:
        print(f"robincheck: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
