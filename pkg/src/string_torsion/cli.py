"""Command line front end: ``string-torsion <command> [options]``.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad parameters.
"""

import argparse
import json
import sys

from .biforms import Quotient
from .errors import (
    LiftError,
    MissingDatum,
    NotAUnit,
    ParameterError,
    UnsupportedContext,
)
from .forms import d_log, reduce_relative
from .group_algebra import parse_element
from .string_ops import (
    LensSpace,
    RhoClass,
    compare_lens_spaces,
    coproduct_rho,
)
from .torsion import (
    FImageTable,
    check_transformation,
    dennis_trace,
    torsion_map,
    whitehead_of_power_equiv,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


def _emit(args, text_lines, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _fmt_set(values):
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def cmd_table(args):
    lens = LensSpace(args.k, args.p)
    ctx = Quotient.parse(args.context)
    rows = [(l, torsion_map(lens, l, ctx)) for l in range(lens.p)]
    lines = [f"t^{l} -> {img}" for l, img in rows]
    payload = {
        "p": lens.p,
        "k": lens.k,
        "r": lens.r,
        "context": ctx.value,
        "rows": [{"l": l, "image": img.to_json()} for l, img in rows],
    }
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_coproduct(args):
    lens = LensSpace(args.k, args.p)
    rho = RhoClass(args.l, args.m)
    ctx = Quotient.parse(args.context)
    value = coproduct_rho(lens, rho, ctx)
    lines = [f"Delta({rho}) on {lens} [{ctx.value}] = {value}"]
    payload = {
        "p": lens.p, "k": lens.k, "l": rho.l, "m": rho.m,
        "context": ctx.value, "value": value.to_json(),
    }
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_compare(args):
    first, second = LensSpace(args.k1, args.p), LensSpace(args.k2, args.p)
    result = compare_lens_spaces(first, second)
    lines = []
    for rep in (result.first, result.second):
        ranks = " ".join(str(rep.ranks[l]) for l in sorted(rep.ranks))
        lines.append(
            f"{rep.lens}: zero-set {_fmt_set(rep.zero_set)} (size {len(rep.zero_set)}), ranks {ranks}"
        )
    lines.append(f"verdict: {result.verdict.value}")
    payload = {
        "verdict": result.verdict.value,
        "spaces": [
            {
                "k": rep.lens.k,
                "p": rep.lens.p,
                "zero_set": sorted(rep.zero_set),
                "ranks": [rep.ranks[l] for l in sorted(rep.ranks)],
            }
            for rep in (result.first, result.second)
        ],
    }
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_torsion(args):
    source, target = LensSpace(args.k1, args.p), LensSpace(args.k2, args.p)
    tau = whitehead_of_power_equiv(source, target, args.a)
    omega = d_log(tau.rep)
    trace = dennis_trace(tau)
    lines = [
        f"f: {source} -> {target}, t -> t^{args.a % args.p}",
        f"tau      = {tau.rep}",
        f"tau^-1   = {tau.inverse_rep}",
        f"dlog tau = {omega.format('dt')} = {omega}",
        f"trace    = {trace} (mod dt/t)",
    ]
    payload = {
        "k1": source.k, "k2": target.k, "p": source.p, "a": args.a % args.p,
        "tau": list(tau.rep.coeffs),
        "tau_inverse": list(tau.inverse_rep.coeffs),
        "dlog": list(omega.coeffs),
        "trace": list(trace.coeffs),
    }
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_trace(args):
    if args.element is not None:
        rep = parse_element(args.element, args.p)
    elif None not in (args.k1, args.k2, args.a):
        rep = whitehead_of_power_equiv(
            LensSpace(args.k1, args.p), LensSpace(args.k2, args.p), args.a
        ).rep
    else:
        raise ParameterError("trace needs --element or all of --k1 --k2 --a")
    omega = d_log(rep)
    trace = reduce_relative(omega)
    lines = [
        f"u        = {rep}",
        f"dlog u   = {omega.format('dt')} = {omega}",
        f"trace    = {trace} (mod dt/t)",
    ]
    payload = {"p": args.p, "u": list(rep.coeffs), "dlog": list(omega.coeffs), "trace": list(trace.coeffs)}
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_check_transform(args):
    source, target = LensSpace(args.k1, args.p), LensSpace(args.k2, args.p)
    table = FImageTable.from_json(args.fimage) if args.fimage else FImageTable.default()
    rho = RhoClass(args.l, args.m)
    check = check_transformation(source, target, args.a, rho, args.context, table)
    verdict = "PASS" if check.passed else "FAIL"
    lines = [
        f"x = [{rho}] on {source}, f(x) = [{check.image}] on {target}, tau = {check.tau}",
        f"LHS  Delta f(x)               = {check.lhs}",
        f"RHS  f(Delta x) + f(x * dlog) = {check.rhs}",
        f"residual (raw, RHS - LHS)     = {check.residual}",
        f"residual [{check.context.value}] = {check.reduced_residual}",
        f"verdict: {verdict}",
    ]
    payload = {
        "verdict": verdict,
        "context": check.context.value,
        "image": {"l": check.image.l, "m": check.image.m},
        "tau": list(check.tau.rep.coeffs),
        "lhs": check.lhs.to_json(),
        "rhs": check.rhs.to_json(),
        "residual": check.residual.to_json(),
        "reduced_residual": check.reduced_residual.to_json(),
    }
    _emit(args, lines, payload)
    return EXIT_OK if check.passed else EXIT_CHECK_FAILED


def cmd_oracle(args):
    from .oracle import enumerate_locus, oracle_coproduct

    lens = LensSpace(args.k, args.p)
    rho = RhoClass(args.l, args.m)
    k1, k2 = enumerate_locus(lens, rho, tol=args.tol)
    numeric = oracle_coproduct(lens, rho, tol=args.tol)
    exact = coproduct_rho(lens, rho)
    same = numeric == exact
    lines = [
        f"{rho} on {lens}",
        f"K2: {len(k2)} circles, weight {k2.weight}, signs {_fmt_set(set(k2.signs))}",
        f"K1: {len(k1)} circles, weight {k1.weight}, signs {_fmt_set(set(k1.signs))}",
        f"oracle  = {numeric}",
        f"formula = {exact}",
        f"verdict: {'EQUAL' if same else 'MISMATCH'}",
    ]
    payload = {
        "k": lens.k, "p": lens.p, "l": rho.l, "m": rho.m,
        "K1": {"count": len(k1), "weight": k1.weight, "times": [str(t) for t in k1.times], "signs": list(k1.signs)},
        "K2": {"count": len(k2), "weight": k2.weight, "times": [str(t) for t in k2.times], "signs": list(k2.signs)},
        "oracle": numeric.to_json(),
        "formula": exact.to_json(),
        "equal": same,
    }
    _emit(args, lines, payload)
    return EXIT_OK if same else EXIT_CHECK_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="string-torsion",
        description="String coproduct, Reidemeister/Whitehead torsion and Dennis trace on lens spaces L(k,p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--p", type=int, default=7, help="order of pi_1 (odd prime)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    contexts = [q.value for q in Quotient]

    p = add("table", cmd_table, "the torsion map t^l -> (t^l - t2^l) dlog R")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--context", choices=contexts, default="relative")

    p = add("coproduct", cmd_coproduct, "Delta of [rho_{l,m}]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--context", choices=contexts, default="relative")

    p = add("compare", cmd_compare, "tell two lens spaces apart by kernel ranks")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)

    p = add("torsion", cmd_torsion, "Whitehead torsion of t -> t^a and its trace")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--a", type=int, required=True)

    p = add("trace", cmd_trace, "Dennis trace dlog of a unit")
    p.add_argument("--element", help='unit of Z[Z_p], e.g. "t + t^2 + t^3 - t^5 - t^6"')
    p.add_argument("--k1", type=int)
    p.add_argument("--k2", type=int)
    p.add_argument("--a", type=int)

    p = add("check-transform", cmd_check_transform, "check Delta f(x) = f(Delta x) + f(x * dlog tau(f))")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--context", choices=contexts, default="relative")
    p.add_argument("--fimage", help="JSON file of f-image records (default: $STRING_TORSION_FIMAGE)")

    p = add("oracle", cmd_oracle, "numerical self-intersection count vs the closed formula")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, UnsupportedContext, MissingDatum) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotAUnit, LiftError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
