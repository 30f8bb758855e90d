"""Command-line frontend: ``qzeta {gpoly,moments,lvalue,cfrac,verify}``.

Exit codes: 0 success, 1 a verified identity failed, 2 usage, budget or
degenerate-parameter errors. Results go to stdout, diagnostics to stderr.
"""
import argparse
import json
import os
import sys

from .errors import QZetaError
from .fraction import FactoredFraction
from .render import render, to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "latex", "text"), default="text")
    common.add_argument("--budget", type=_positive, default=None, help="max group elements to enumerate")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)

    parser = argparse.ArgumentParser(prog="qzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gpoly", parents=[common], help="generating polynomial of (des, fmaj) over G(r, n)")
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--n", type=_nonneg, required=True)

    p = sub.add_parser("moments", parents=[common], help="moment mu_n of the shifted little q-Jacobi weight")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--c", type=int, default=1)

    p = sub.add_parser("lvalue", parents=[common], help="q-analogue of L(-n, c, r) as a function of z")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--raw-c", action="store_true", help="use c as given instead of its residue in 1..r")

    p = sub.add_parser("cfrac", parents=[common], help="J-fraction coefficients b_k, lambda_k")
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--upto", type=_nonneg, default=3)
    p.add_argument("--from-moments", action="store_true", help="recover the coefficients from the moments")

    p = sub.add_parser("verify", parents=[common], help="run an identity suite; prints a JSON report")
    p.add_argument("--suite", choices=("carlitz", "moments", "cfrac", "zeta", "all"), default="all")
    p.add_argument("--rmax", type=_positive, default=None)
    p.add_argument("--nmax", type=_nonneg, default=None)
    p.add_argument("--order", type=_nonneg, default=None)
    p.add_argument("--upto", type=_nonneg, default=None)
    p.add_argument("--no-timing", action="store_true", help="omit millis so reports can be diffed")
    return parser


def _display(obj):
    """Cancel denominator factors that divide the numerator; quotients stay as they are."""
    return obj.reduce() if isinstance(obj, FactoredFraction) else obj


def _emit(obj, fmt, var):
    obj = _display(obj)
    if fmt == "json":
        print(json.dumps(render(obj, "json", var)))
    else:
        print(render(obj, fmt, var))


def cmd_gpoly(args):
    from .wreath import gen_poly

    _emit(gen_poly(args.r, args.n, workers=args.threads, budget=args.budget), args.format, "Z")
    return EXIT_OK


def cmd_moments(args):
    from .moments import specialized_moment

    _emit(specialized_moment(args.n, args.r, args.c), args.format, "Z")
    return EXIT_OK


def cmd_lvalue(args):
    from .zeta import L_value

    _emit(L_value(args.n, args.c, args.r, canonical=not args.raw_c), args.format, "z")
    return EXIT_OK


def cmd_cfrac(args):
    from .cfrac import closed_form_coeffs, moments_to_jfraction
    from .moments import specialized_moments

    if args.from_moments:
        J = moments_to_jfraction(specialized_moments(2 * args.upto + 2, args.r, args.c), args.upto)
    else:
        J = closed_form_coeffs(args.r, args.c, args.upto)
    if args.format == "json":
        print(json.dumps({"provenance": J.provenance, "b": to_json([_display(v) for v in J.b]),
                          "lambda": to_json([_display(v) for v in J.lam])}))
        return EXIT_OK
    for name, seq in (("b", J.b), ("lambda", J.lam)):
        for k, v in enumerate(seq):
            print(f"{name}_{k} = {render(_display(v), args.format, 'Z')}")
    return EXIT_OK


def cmd_verify(args):
    from .verify import run_suite

    report = run_suite(
        args.suite,
        workers=args.threads,
        rmax=args.rmax,
        nmax=args.nmax,
        order=args.order,
        upto=args.upto,
        budget=args.budget,
    )
    if args.no_timing:
        for row in report:
            row.pop("millis")
    print(json.dumps(report, indent=1))
    failed = [row for row in report if not row["pass"]]
    for row in failed:
        print(f"FAIL {row['check']} {row['params']}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "gpoly": cmd_gpoly,
    "moments": cmd_moments,
    "lvalue": cmd_lvalue,
    "cfrac": cmd_cfrac,
    "verify": cmd_verify,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (QZetaError, ValueError) as exc:
        print(f"qzeta: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
