"""Command-line front end.

One subcommand per engine operation, reports as JSON, CSV or plain
text.  Exact rationals are always serialized as "p/q" strings, never as
floats.  Exit codes: 0 success, 2 usage error, 3 exact path infeasible
(the error report is emitted as JSON so callers can machine-parse it).

SINCPROD_PRECISION_BITS sets the default working precision for both
interval searches and the numeric oracle.
"""

from __future__ import annotations

import argparse
import json
import sys

import mpmath as mp

from . import verify as verify_mod
from .borwein_engine import (
    NODE_BUDGET_DEFAULT,
    CosineWeightSpec,
    ExactPathUnavailableError,
    NodeBudgetError,
    SincProductSpec,
    deficit_report,
    fourier_spline,
    integral_exact,
    weighted_integral_exact,
)
from .exact_core import (
    DEFAULT_PRECISION_BITS,
    HarmonicFamily,
    NonTerminatingSearchError,
    breaking_point_report,
)
from .numeric_oracle import (
    ToleranceUnreachableError,
    example5_integral,
    lower_bound_check,
    numeric_sum,
    verify_ft_example5,
)
from .rational import rat, rat_str
from .spline_engine import SIZE_GUARD_DEFAULT, SplineSizeError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3

INFEASIBLE_ERRORS = (
    SplineSizeError,
    NodeBudgetError,
    ExactPathUnavailableError,
    NonTerminatingSearchError,
    ToleranceUnreachableError,
)


def _parse_scale(token: str):
    """Real scale grammar for the oracle: '1', '2.5', 'pi', '5pi/4', 'pi/3'."""
    s = token.strip().lower()
    num, den = s, None
    if "/" in s:
        num, den = s.split("/", 1)
    if num.endswith("pi"):
        head = num[:-2]
        value = mp.pi * (rat_to_mpf(rat(head)) if head else 1)
    else:
        value = rat_to_mpf(rat(num))
    if den is not None:
        value = value / rat_to_mpf(rat(den))
    return value


def rat_to_mpf(x):
    return mp.mpf(x.numerator) / mp.mpf(x.denominator)


def _parse_spec(args) -> SincProductSpec:
    if args.betas and args.family:
        raise _usage("give either --betas or --family, not both")
    if args.betas:
        return SincProductSpec(tuple(rat(tok) for tok in args.betas.split(",")))
    if args.family:
        if args.n is None:
            raise _usage("--family requires --n")
        if args.family == "odd-harmonic":
            return SincProductSpec.odd_harmonic(args.n)
        if args.family == "sinc-power":
            return SincProductSpec.sinc_power(args.n)
        raise _usage("unknown family %r" % args.family)
    raise _usage("a spec is required: --betas or --family with --n")


class _UsageError(Exception):
    pass


def _usage(msg: str) -> _UsageError:
    return _UsageError(msg)


def _emit(report: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(report))
    elif fmt == "csv":
        keys = list(report.keys())
        print(",".join(keys))
        cells = []
        for k in keys:
            v = report[k]
            if isinstance(v, list):
                v = ";".join("=".join(str(p) for p in item) if isinstance(item, list) else str(item) for item in v)
            cells.append('"%s"' % v if "," in str(v) else str(v))
        print(",".join(cells))
    else:
        for k, v in report.items():
            print("%s: %s" % (k, v))


def _add_spec_flags(p):
    p.add_argument("--betas", help='comma list of rational scales, e.g. "1,1/3,1/5"')
    p.add_argument("--family", choices=["odd-harmonic", "sinc-power"])
    p.add_argument("--n", type=int, help="family size parameter")
    p.add_argument("--node-budget", type=int, default=NODE_BUDGET_DEFAULT,
                   help="pruned-enumeration node cap before giving up")
    p.add_argument("--size-guard", type=int, default=SIZE_GUARD_DEFAULT,
                   help="breakpoint-count cap for full spline builds")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sincprod",
        description="Exact sinc-product integrals, sums, deficits and breaking points",
    )
    ap.add_argument("--format", choices=["json", "csv", "plain"], default="plain")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("breakpoint", help="largest n keeping the partial scale sum below a threshold")
    p.add_argument("--family", choices=["odd-harmonic"], default="odd-harmonic")
    p.add_argument("--threshold", required=True)
    p.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS)

    p = sub.add_parser("integral", help="exact integral of the sinc product")
    _add_spec_flags(p)
    p.add_argument("--digits", type=int, default=12)

    p = sub.add_parser("weighted-integral", help="exact odd-cosine weighted integral")
    _add_spec_flags(p)
    p.add_argument(
        "--weights", type=int, required=True,
        help="number of cosine terms: 1 means 2cos(pi t), 2 adds 2cos(3 pi t), ...",
    )
    p.add_argument("--digits", type=int, default=12)

    p = sub.add_parser("deficit", help="exact deficit 1 - integral")
    _add_spec_flags(p)
    p.add_argument(
        "--weights", type=int, default=0,
        help="number of cosine terms (0 = plain unweighted integral)",
    )
    p.add_argument("--digits", type=int, default=10)

    p = sub.add_parser("sum", help="numeric integer-sample sum with rigorous tail bound")
    p.add_argument("--scales", required=True, help='comma list, e.g. "5pi/4,1,1"')
    p.add_argument("--alternating", action="store_true")
    p.add_argument("--one-sided", action="store_true")
    p.add_argument("--abs-tol", type=float, default=1e-10)

    p = sub.add_parser("lower-bound", help="sum-side lower bound counterexample check")
    p.add_argument("--a0", required=True)
    p.add_argument("--rest", required=True)
    p.add_argument("--abs-tol", type=float, default=5e-10)

    p = sub.add_parser("example5", help="band-limited kernel integral or transform check")
    p.add_argument("--a", help='comma list of rational scales, e.g. "0.5,0.3"')
    p.add_argument("--b", help="kernel frequency bound")
    p.add_argument("--ft-omegas", help="comma list of transform sample frequencies")
    p.add_argument("--tol", type=float, default=1e-6)

    p = sub.add_parser("spline-dump", help="emit the transform spline as CSV pieces")
    _add_spec_flags(p)
    p.add_argument("--output", help="file path, default stdout")

    p = sub.add_parser("verify", help="run the acceptance self-checks")
    p.add_argument("--suite", choices=["fast", "full"], default="fast")
    return ap


def _run(args) -> int:
    fmt = args.format
    if args.command == "breakpoint":
        rep = breaking_point_report(
            HarmonicFamily.odd_harmonic(), rat(args.threshold), precision_bits=args.precision_bits
        )
        if fmt == "plain":
            print(rep.n)
        else:
            _emit(
                {
                    "command": "breakpoint",
                    "family": args.family,
                    "threshold": rat_str(rat(args.threshold)),
                    "breaking_point": rep.n,
                    "mode": rep.mode,
                    "precision_bits": rep.precision_bits,
                },
                fmt,
            )
        return EXIT_OK

    if args.command in ("integral", "weighted-integral", "deficit"):
        spec = _parse_spec(args)
        limits = {"node_budget": args.node_budget, "size_guard": args.size_guard}
        if args.command == "integral":
            report = integral_exact(spec, digits=args.digits, **limits)
            weights = None
        elif args.command == "weighted-integral":
            if args.weights < 1:
                raise _usage("--weights must be >= 1 for weighted-integral")
            weights = CosineWeightSpec(args.weights - 1)
            report = weighted_integral_exact(spec, weights, digits=args.digits, **limits)
        else:
            if args.weights < 0:
                raise _usage("--weights must be >= 0")
            weights = CosineWeightSpec(args.weights - 1) if args.weights else None
            report = deficit_report(spec, weights, digits=args.digits, **limits)
        _emit(report.to_dict(args.command, spec, weights), fmt)
        return EXIT_OK

    if args.command == "sum":
        scales = [_parse_scale(tok) for tok in args.scales.split(",")]
        res = numeric_sum(scales, alternating=args.alternating, abs_tol=args.abs_tol, one_sided=args.one_sided)
        _emit({"command": "sum", "scales": args.scales, **res.to_dict()}, fmt)
        return EXIT_OK

    if args.command == "lower-bound":
        rep = lower_bound_check(
            _parse_scale(args.a0), [_parse_scale(t) for t in args.rest.split(",")], abs_tol=args.abs_tol
        )
        _emit({"command": "lower-bound", "a0": args.a0, "rest": args.rest, **rep}, fmt)
        return EXIT_OK

    if args.command == "example5":
        if args.ft_omegas:
            reports = verify_ft_example5([tok for tok in args.ft_omegas.split(",")], tol=args.tol)
            if fmt == "json":
                print(json.dumps({"command": "example5-ft", "samples": reports}))
            else:
                for r in reports:
                    _emit(r, fmt)
            return EXIT_OK
        if not args.a or not args.b:
            raise _usage("example5 needs --a and --b (or --ft-omegas)")
        value = example5_integral(args.a.split(","), args.b, tol=args.tol)
        _emit(
            {
                "command": "example5",
                "a": args.a,
                "b": args.b,
                "value": mp.nstr(value, 17),
                "pi_difference": mp.nstr(value - mp.pi, 5),
            },
            fmt,
        )
        return EXIT_OK

    if args.command == "spline-dump":
        spec = _parse_spec(args)
        csv_text = fourier_spline(spec, size_guard=args.size_guard).to_csv()
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(csv_text)
        else:
            sys.stdout.write(csv_text)
        return EXIT_OK

    if args.command == "verify":
        results = verify_mod.run_suite(args.suite)
        failures = [r for r in results if not r.passed]
        for r in results:
            print(
                "%s  criterion %-2s  %-55s (%.2fs)  %s"
                % ("PASS" if r.passed else "FAIL", r.criterion, r.name, r.seconds, "" if r.passed else r.detail)
            )
        print(
            "%d/%d checks passed (%s suite)"
            % (len(results) - len(failures), len(results), args.suite)
        )
        return EXIT_OK if not failures else 1

    raise _usage("unknown command")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _run(args)
    except _UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except INFEASIBLE_ERRORS as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
