"""Command-line front end: ``divpoly compute | eval | verify | oeis-check``.

Exit codes: 0 when everything holds, 1 on a mathematical counterexample,
2 on usage or I/O errors. Reports go to standard output, diagnostics to
standard error.
"""

import argparse
import json
import sys
from typing import List, Optional, TextIO

from src.components.arith_core import divisors
from src.components.identity_suites import SERIES_SUITE, SUITE_NAMES
from src.components.interval_polys import (
    EVALUATION_POINTS,
    FamilySpec,
    SymmetricLaurentPoly,
    build_poly,
    divisor_contributions,
    eval_at_integer,
    evaluate,
    evaluation_point,
    norm_squared,
    real_part_doubled,
)
from src.config import LOG_LEVELS, parse_range, settings
from src.orchestrator import OEIS_SEQUENCES, VerificationOrchestrator, render_json
from src.utils.exceptions import BFileError, ContractViolation, UsageError
from src.utils.logger import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _range(text: str):
    try:
        return parse_range(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for all subcommands."""
    parser = argparse.ArgumentParser(
        prog="divpoly",
        description="Divisor-interval polynomials L_n(q), P_n(q) and their identities",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        help="Override the configured log level",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="Print the centred coefficients of L_n or P_n")
    compute.add_argument("--family", required=True, choices=["L", "P"])
    compute.add_argument("--n", required=True, type=_positive_int)
    compute.add_argument("--format", default="text", choices=["json", "csv", "text"])
    compute.add_argument(
        "--explain", action="store_true", help="Also list each divisor's hit range (text format)"
    )

    ev = sub.add_parser("eval", help="Evaluate L_n or P_n exactly at a root of unity")
    ev.add_argument("--family", required=True, choices=["L", "P"])
    ev.add_argument("--n", required=True, type=_positive_int)
    ev.add_argument(
        "--at",
        required=True,
        help=f"One of {', '.join(EVALUATION_POINTS)} or any integer",
    )

    verify = sub.add_parser("verify", help="Run a verification suite")
    verify.add_argument("--suite", required=True, choices=list(SUITE_NAMES) + ["all"])
    verify.add_argument("--range", type=_range, help="LO..HI (default per suite)")
    verify.add_argument("--workers", type=_positive_int)
    verify.add_argument("--order", type=_positive_int, help="Series truncation order")
    verify.add_argument("--format", default="json", choices=["json", "text"])
    verify.add_argument("--save", action="store_true", help="Also write JSON and CSV report files")

    oeis = sub.add_parser("oeis-check", help="Compare L_n-route values with an OEIS b-file")
    oeis.add_argument("--seq", required=True, choices=list(OEIS_SEQUENCES))
    oeis.add_argument("--bfile", required=True)
    oeis.add_argument("--range", type=_range)
    oeis.add_argument("--format", default="json", choices=["json", "text"])

    return parser


def format_poly(poly: SymmetricLaurentPoly, fmt: str, explain: bool = False) -> str:
    """Serialise a polynomial as JSON, ``k,c`` CSV rows, or a text listing."""
    if fmt == "json":
        return json.dumps(
            {
                "family": poly.family.name,
                "n": poly.n,
                "center": poly.center,
                "coeffs": [{"k": k, "c": c} for k, c in poly.items()],
            }
        )
    if fmt == "csv":
        return "\n".join(f"{k},{c}" for k, c in poly.items())

    lines = [
        f"{poly.family.name}_{poly.n}(q) / q^{poly.center}, k = {-poly.center}..{poly.center}:",
        "[" + ",".join(str(c) for c in poly.as_list()) + "]",
    ]
    if explain:
        for row in divisor_contributions(poly.n, poly.family):
            lines.append(f"d={row.d}: k in [{row.k_lo}, {row.k_hi}) count={row.count}")
    return "\n".join(lines)


def cmd_compute(args, out: TextIO) -> int:
    poly = build_poly(args.n, FamilySpec.from_name(args.family))
    print(format_poly(poly, args.format, args.explain), file=out)
    return EXIT_OK


def cmd_eval(args, out: TextIO) -> int:
    family = FamilySpec.from_name(args.family)
    point = args.at.strip().lower()

    if point not in EVALUATION_POINTS:
        try:
            q = int(point)
        except ValueError:
            raise UsageError(
                f"unknown point {args.at!r}; expected one of {', '.join(EVALUATION_POINTS)} "
                "or an integer"
            ) from None
        value = eval_at_integer(build_poly(args.n, family), q)
        print(json.dumps({"family": family.name, "n": args.n, "at": q, "value": value}), file=out)
        return EXIT_OK

    order = evaluation_point(point)
    v = evaluate(args.n, family, order, divisors(args.n))
    result = {"family": family.name, "n": args.n, "at": point}
    if order in (1, 2):
        result["value"] = v.a
    else:
        result.update(v.as_dict())
        result["norm_squared"] = norm_squared(v)
        if order in (3, 6):
            result["real_part_doubled"] = real_part_doubled(v)
    print(json.dumps(result), file=out)
    return EXIT_OK


def _emit_reports(reports, fmt: str, out: TextIO) -> int:
    if fmt == "json":
        print(json.dumps(render_json(reports), indent=2), file=out)
    else:
        for report in reports:
            print(report.render_text(), file=out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_verify(args, out: TextIO) -> int:
    orchestrator = VerificationOrchestrator(workers=args.workers)
    order = args.order or settings.series_order
    if args.suite in (SERIES_SUITE, "all"):
        lo = hi = 0
    else:
        lo, hi = args.range or settings.default_range(args.suite)
    reports = orchestrator.run(args.suite, lo, hi, order)
    if args.save or settings.save_reports:
        orchestrator.save_results(reports)
    return _emit_reports(reports, args.format, out)


def cmd_oeis_check(args, out: TextIO) -> int:
    orchestrator = VerificationOrchestrator()
    lo, hi = args.range if args.range else (None, None)
    report = orchestrator.run_oeis_check(args.seq, args.bfile, lo, hi)
    return _emit_reports([report], args.format, out)


COMMANDS = {
    "compute": cmd_compute,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "oeis-check": cmd_oeis_check,
}


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run the CLI.

    Args:
        argv: Arguments without the program name (default ``sys.argv[1:]``)
        out: Report stream (default standard output)

    Returns:
        Process exit code
    """
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    if args.log_level:
        setup_logging(args.log_level)

    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, BFileError, ContractViolation, OSError) as e:
        logger.error(str(e))
        print(f"divpoly: error: {e}", file=sys.stderr)
        return EXIT_USAGE
