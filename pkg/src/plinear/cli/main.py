"""Command-line interface: build, evaluate and verify p-linear schemes."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from plinear import __version__
from plinear.config import Settings, get_settings
from plinear.engine import (
    EvaluationTrace,
    VerificationReport,
    evaluate,
    gessel_check,
    lucas_check,
    multilinear_lucas_check,
    power_of_two_check,
    two_state_power_check,
    verify_hasse_witt,
    verify_scheme,
)
from plinear.exceptions import PLinearError
from plinear.models import CTScheme, SequenceSpec
from plinear.rings import parse_poly
from plinear.schemes import build_ct_scheme, build_rat_scheme
from plinear.storage import load_scheme, save_scheme
from plinear.utils import ReportExporter

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

DEFAULT_KMAX = 60

SUITES = ("lucas", "gessel", "hasse-witt", "power2", "multilinear")


def _variables(text: str) -> List[str]:
    names = [v.strip() for v in text.split(",") if v.strip()]
    if not names:
        raise argparse.ArgumentTypeError("--vars needs at least one variable name")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plinear",
        description="Build, evaluate and verify p-linear schemes modulo prime powers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", "-v", action="store_true", help="Log diagnostics to stderr")
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="Worker threads for scheme construction (default: PLINEAR_THREADS or 1)",
    )
    parser.add_argument("--json", action="store_true", help="Print results as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    ct = sub.add_parser("build-ct", help="Build a scheme for ct[q * g^k] mod p^r")
    ct.add_argument("--poly", required=True, help="Laurent polynomial g, e.g. 'x + 2 + 1/x'")
    ct.add_argument("--num", default=None, help="Numerator q supported inside Newton(g) (default 1)")
    ct.add_argument("--vars", required=True, type=_variables, help="Comma-separated variable names")
    ct.add_argument("--p", required=True, type=int, help="Prime")
    ct.add_argument("--r", type=int, default=1, help="Precision exponent (default 1)")
    ct.add_argument("--out", required=True, type=Path, help="Scheme JSON output path")

    rat = sub.add_parser("build-rat", help="Build a scheme for the coefficients of Q/P mod p^r")
    rat.add_argument("--den", required=True, help="Denominator polynomial P with p not dividing P(0)")
    rat.add_argument("--num", default=None, help="Numerator polynomial Q (default 1)")
    rat.add_argument("--vars", required=True, type=_variables, help="Comma-separated variable names")
    rat.add_argument("--p", required=True, type=int, help="Prime")
    rat.add_argument("--r", type=int, default=1, help="Precision exponent (default 1)")
    rat.add_argument("--out", required=True, type=Path, help="Scheme JSON output path")

    ev = sub.add_parser("eval", help="Evaluate a scheme at an index")
    ev.add_argument("--scheme", required=True, type=Path)
    ev.add_argument("--index", required=True, help="Decimal index, or k1,k2,... for rational schemes")
    ev.add_argument("--trace", action="store_true", help="Print digits and intermediate vectors")

    ver = sub.add_parser("verify", help="Verify a scheme file or run a built-in suite")
    target = ver.add_mutually_exclusive_group(required=True)
    target.add_argument("--scheme", type=Path)
    target.add_argument("--suite", choices=SUITES)
    ver.add_argument("--kmax", type=int, default=None, help="Largest index to check")
    ver.add_argument("--p", type=int, default=None, help="Prime for suites")
    ver.add_argument("--r", type=int, default=None, help="Precision exponent for power2 (default 2)")
    ver.add_argument("--sequence", default="central-binomial", help="Sequence for the lucas suite")
    ver.add_argument("--param", type=int, default=None, help="Franel exponent or multinomial size")
    ver.add_argument(
        "--poly", default=None, help="Polynomial for hasse-witt, multilinear or custom sequences"
    )
    ver.add_argument("--num", default=None, help="Numerator for custom sequences")
    ver.add_argument("--vars", type=_variables, default=None)
    ver.add_argument("--report-out", type=Path, default=None, help="Also write the report (.json/.csv/.txt)")
    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def cmd_build(args, settings: Settings) -> int:
    """Build a scheme, save it and print its state count, rho and state bound."""
    if args.command == "build-ct":
        g = parse_poly(args.poly, args.vars)
        q = parse_poly(args.num, args.vars) if args.num else None
        scheme = build_ct_scheme(g, args.p, args.r, q=q, variables=args.vars, threads=settings.threads)
    else:
        P = parse_poly(args.den, args.vars)
        Q = parse_poly(args.num, args.vars) if args.num else None
        scheme = build_rat_scheme(P, args.p, args.r, Q=Q, variables=args.vars)
    save_scheme(scheme, args.out)
    summary = scheme.summary()
    summary["out"] = str(args.out)
    _emit(
        args,
        summary,
        f"states={summary['states']} rho={summary['rho']} bound={summary['bound']} -> {args.out}",
    )
    return EXIT_OK


def cmd_eval(args, settings: Settings) -> int:
    """Print a_N mod p^r."""
    scheme = load_scheme(args.scheme)
    parts = [part.strip() for part in args.index.split(",")]
    index = parts[0] if isinstance(scheme, CTScheme) and len(parts) == 1 else parts
    trace = EvaluationTrace() if args.trace else None
    value = evaluate(scheme, index, trace)
    if args.json:
        payload = {"index": args.index, "modulus": scheme.modulus, "value": value.value}
        if trace is not None:
            payload["trace"] = {"digits": trace.digits, "vectors": trace.vectors}
        print(json.dumps(payload))
        return EXIT_OK
    if trace is not None:
        print(trace.to_text())
    print(value.value)
    return EXIT_OK


def _run_suite(args, settings: Settings) -> VerificationReport:
    suite = args.suite
    if suite == "gessel":
        return gessel_check(args.p or 5, args.kmax if args.kmax is not None else 100)
    if suite == "power2":
        kmax = args.kmax if args.kmax is not None else 500
        if args.r is None or args.r == 2:
            return two_state_power_check(args.p or 3, kmax)
        return power_of_two_check(args.p or 3, args.r, kmax)
    if suite == "multilinear":
        if not args.poly or not args.vars:
            raise ValueError("--suite multilinear needs --poly and --vars")
        P = parse_poly(args.poly, args.vars)
        kmax = args.kmax if args.kmax is not None else 30
        return multilinear_lucas_check(P, args.p or 3, kmax, settings)
    if suite == "hasse-witt":
        if not args.poly or not args.vars:
            raise ValueError("--suite hasse-witt needs --poly and --vars")
        g = parse_poly(args.poly, args.vars)
        return verify_hasse_witt(g, args.p or 3, args.kmax if args.kmax is not None else 40, settings)
    spec = SequenceSpec(
        name=args.sequence,
        parameter=args.param,
        poly=args.poly,
        numerator=args.num,
        variables=args.vars or [],
    )
    return lucas_check(spec, args.p or 3, args.kmax if args.kmax is not None else 300, settings)


def cmd_verify(args, settings: Settings) -> int:
    """Exit 0 when every check passes, 1 otherwise."""
    if args.scheme is not None:
        scheme = load_scheme(args.scheme)
        kmax = args.kmax
        if kmax is None:
            kmax = DEFAULT_KMAX
            if isinstance(scheme, CTScheme):
                # largest k whose digits l < p stay within the oracle cap
                kmax = max(0, min(kmax, (settings.ct_cap(scheme.n) + 1) // scheme.p - 1))
        report = verify_scheme(scheme, kmax, settings=settings)
    else:
        report = _run_suite(args, settings)
    _emit(args, report.to_dict(), report.to_text())
    if args.report_out is not None:
        ReportExporter().export([report], args.report_out)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


COMMANDS = {
    "build-ct": cmd_build,
    "build-rat": cmd_build,
    "eval": cmd_eval,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    configure_logging(args.verbose)

    settings = get_settings()
    if args.threads is not None:
        if args.threads < 1:
            print("[error] --threads must be positive", file=sys.stderr)
            return EXIT_USAGE
        settings = settings.model_copy(update={"threads": args.threads})

    try:
        return COMMANDS[args.command](args, settings)
    except (PLinearError, ValidationError, ValueError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"[error] {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
