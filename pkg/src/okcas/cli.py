"""Command-line front end: ``okcas <subcommand> ...``.

Exit codes: 0 success, 1 verification failure or method mismatch,
2 invalid input.
"""

import argparse
import io
import json
import os
import sys

from .casimir import casimir_eig_matrix, casimir_eig_sum, restricted_casimir
from .exactpoly import format_rational, to_rational
from .expansion import expand
from .okounkov import OkounkovParams, SpecializationParams, okounkov_poly
from .partitions import key, length, make_partition, y_lambda
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


def parse_partition(text):
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"invalid partition {text!r}: expected comma-separated integers") from None
    try:
        return make_partition(parts)
    except ValueError as exc:
        raise UsageError(f"invalid partition {text!r}: {exc}") from None


def parse_rational(text):
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid rational {text!r}: {exc}") from None


def parse_vector(text):
    text = text.strip()
    if not text:
        return []
    return [parse_rational(t) for t in text.split(",")]


def thread_cap():
    raw = os.environ.get("OKCAS_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"OKCAS_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"OKCAS_THREADS must be a positive integer, got {raw!r}")
    return value


def _spec_params(n, r, s):
    if r < 0 or n < 2 * r:
        raise UsageError(f"need n >= 2r >= 0, got n={n}, r={r}")
    return SpecializationParams(n, r, s)


def cmd_okounkov(args, out, err):
    lam = parse_partition(args.lam)
    if args.r < 0:
        raise UsageError("--r must be nonnegative")
    params = OkounkovParams(args.r, parse_rational(args.tau), parse_rational(args.alpha))
    if length(lam) > args.r:
        err.write(f"warning: lambda={key(lam)} has more than r={args.r} parts; polynomial is 0\n")
    P = okounkov_poly(lam, params)
    if args.eval is not None:
        point = parse_vector(args.eval)
        if len(point) != args.r:
            raise UsageError(f"--eval needs {args.r} coordinates, got {len(point)}")
        value = P.eval(point)
        out.write((json.dumps(format_rational(value)) if args.json else format_rational(value)) + "\n")
    else:
        out.write((P.to_json() if args.json else str(P)) + "\n")
    return 0


def cmd_casimir(args, out, err):
    weight = parse_vector(args.weight)
    if not weight:
        raise UsageError("--weight must have at least one entry")
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    values = []
    if args.method in ("matrix", "both"):
        values.append(casimir_eig_matrix(weight, args.k))
    if args.method in ("scheunert", "both"):
        try:
            values.append(casimir_eig_sum(weight, args.k))
        except ZeroDivisionError as exc:
            raise UsageError(str(exc)) from None
    for v in values:
        out.write(format_rational(v) + "\n")
    if len(set(values)) > 1:
        err.write("error: matrix and Scheunert eigenvalues disagree\n")
        return 1
    return 0


def cmd_restricted(args, out, err):
    _spec_params(args.n, args.r, 0)
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    C = restricted_casimir(args.k, args.n, args.r)
    out.write((C.to_json() if args.json else str(C)) + "\n")
    return 0


def cmd_expand(args, out, err):
    lam = parse_partition(args.lam)
    sp = _spec_params(args.n, args.r, parse_rational(args.s))
    if length(lam) > sp.r:
        raise UsageError(f"lambda={key(lam)} has more than r={sp.r} parts")
    result = expand(lam, sp)
    if args.json:
        out.write(result.to_json() + "\n")
    else:
        obj = result.to_json_obj()
        out.write(f"lambda={key(lam)} n={sp.n} r={sp.r} s={obj['s']}\n")
        for mu, c in obj["coeffs"].items():
            out.write(f"b{mu} = {c}\n")
        out.write(f"residual_zero={str(result.residual_zero).lower()}\n")
    return 0


def cmd_verify(args, out, err):
    failures = 0
    total = 0
    for suite, label, ok, detail in run_suite(args.suite, args.max_weight, args.max_rank):
        total += 1
        failures += not ok
        line = f"{'PASS' if ok else 'FAIL'} [{suite}] {label}"
        if detail:
            line += f" ({detail})"
        out.write(line + "\n")
    out.write(f"{total - failures}/{total} checks passed\n")
    return 1 if failures else 0


def cmd_ylambda(args, out, err):
    out.write(format_rational(y_lambda(parse_partition(args.lam))) + "\n")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="okcas", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("okounkov", help="Okounkov BC interpolation polynomial")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--tau", default="1")
    p.add_argument("--alpha", default="0")
    p.add_argument("--eval", default=None, help="comma-separated point")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_okounkov)

    p = sub.add_parser("casimir", help="Casimir eigenvalue c_k(weight)")
    p.add_argument("--weight", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["matrix", "scheunert", "both"], default="matrix")
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("restricted", help="restricted Casimir polynomial C_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_restricted)

    p = sub.add_parser("expand", help="b_mu coefficients of the specialized polynomial")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", default="0")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--max-rank", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ylambda", help="hook-product constant y_lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_ylambda)
    return parser


def run(argv, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        thread_cap()
        args = build_parser().parse_args(argv)
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"okcas: error: {exc}\n")
        return 2


def main():
    buf = io.StringIO()
    code = run(sys.argv[1:], out=buf)
    sys.stdout.write(buf.getvalue())
    sys.stdout.flush()
    sys.exit(code)


if __name__ == "__main__":
    main()
