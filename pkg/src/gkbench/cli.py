"""Command-line front end.

Subcommands compute with the library and emit Record streams in the human
or machine report format; `verify` runs the named campaigns.  Exit status
is 0 when every emitted record passes, 1 when any fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import budget
from .campaigns import campaign_names, run_campaign
from .cyclo import CycField
from .gammalab import (
    gamma_coeff,
    independence_witness,
    rn_basis_size,
    rn_dim_series,
)
from .growth import GrowthSeries, degree_estimate, slope_extract
from .mqfield import PrimeBasis
from .parser import (
    ParseError,
    max_symbol_index,
    parse,
    to_field,
    to_free_word,
    to_group,
    to_quantum,
    to_twisted,
)
from .qaffine import (
    QAlgebra,
    gk_profile,
    hom_check,
    normal_form,
    power_map_images,
)
from .reports import all_passed, emit, timed_record


def _algebra(args) -> QAlgebra:
    return QAlgebra(args.n, CycField(args.p, args.t))


def _write_series(path: str, pairs) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for r, d in pairs:
            handle.write(f"{r},{d}\n")


# --- handlers ---------------------------------------------------------------


def _cmd_gamma_coeff(args):
    t0 = time.perf_counter()
    target = to_group(parse(args.target, "group"))
    value = gamma_coeff(args.power, target)
    return [
        timed_record(
            "gamma.coeff",
            {"power": args.power, "target": str(target)},
            {"coefficient": value},
            True,
            t0,
        )
    ]


def _cmd_gamma_witness(args):
    t0 = time.perf_counter()
    witness = independence_witness(args.degree)
    return [
        timed_record(
            "gamma.witness",
            {"degree": args.degree},
            {
                "diagonal": list(witness.diagonal),
                "independent": witness.independent,
                "trace": list(witness.trace),
            },
            witness.independent,
            t0,
        )
    ]


def _cmd_gamma_growth(args):
    n = args.n
    rmax = args.rmax if args.rmax is not None else 2 * n + 12
    pairs = rn_dim_series(n, rmax, max(1, 2 * n))
    if args.series_out:
        _write_series(args.series_out, pairs)
    series = GrowthSeries(pairs)
    records = []
    t0 = time.perf_counter()
    fit = slope_extract(series)
    records.append(
        timed_record(
            "gamma.growth.slope",
            {"pairs": n, "rmax": rmax},
            {
                "slope": fit.slope if fit else "nonlinear",
                "offset": fit.offset if fit else None,
                "expected_slope": rn_basis_size(n),
            },
            fit is not None and fit.slope == rn_basis_size(n),
            t0,
        )
    )
    t0 = time.perf_counter()
    est = degree_estimate(series)
    records.append(
        timed_record(
            "gamma.growth.degree",
            {"pairs": n, "rmax": rmax},
            {"degree": est.label, "raw": round(est.raw, 4), "expected": 1},
            est.snapped == 1 and not est.unbounded,
            t0,
        )
    )
    return records


def _cmd_quantum_nf(args):
    alg = _algebra(args)
    t0 = time.perf_counter()
    node = parse(args.expr, "quantum")
    try:
        poly = normal_form(to_free_word(node, alg))
    except ValueError:
        poly = to_quantum(node, alg)  # sums are already canonical termwise
    return [
        timed_record(
            "quantum.normal_form",
            {"n": args.n, "p": args.p, "t": args.t, "expr": args.expr},
            {"normal_form": str(poly)},
            True,
            t0,
        )
    ]


def _cmd_quantum_mul(args):
    alg = _algebra(args)
    t0 = time.perf_counter()
    lhs = to_quantum(parse(args.lhs, "quantum"), alg)
    rhs = to_quantum(parse(args.rhs, "quantum"), alg)
    return [
        timed_record(
            "quantum.product",
            {"n": args.n, "p": args.p, "t": args.t, "lhs": args.lhs, "rhs": args.rhs},
            {"product": str(lhs * rhs)},
            True,
            t0,
        )
    ]


def _cmd_quantum_growth(args):
    alg = _algebra(args)
    rmax = args.rmax if args.rmax is not None else 12
    pairs = gk_profile(alg, rmax)
    if args.series_out:
        _write_series(args.series_out, pairs)
    t0 = time.perf_counter()
    est = degree_estimate(GrowthSeries(pairs))
    return [
        timed_record(
            "quantum.growth.degree",
            {"n": args.n, "p": args.p, "t": args.t, "rmax": rmax},
            {"degree": est.label, "raw": round(est.raw, 4), "expected": args.n},
            est.snapped == args.n and not est.unbounded,
            t0,
        )
    ]


def _cmd_quantum_hom_check(args):
    dst = _algebra(args)
    src_t = args.src_t if args.src_t is not None else args.t - 1
    if src_t < 0:
        raise ValueError("source level must be nonnegative")
    src = QAlgebra(args.n, CycField(args.p, src_t))
    t0 = time.perf_counter()
    if args.images:
        images = [
            to_quantum(parse(piece.strip(), "quantum"), dst)
            for piece in args.images.split(";")
        ]
        label = args.images
    else:
        images = power_map_images(src, dst, args.p)
        label = f"x_i -> x_i^{args.p}"
    report = hom_check(src, dst, images)
    return [
        timed_record(
            "quantum.hom_check",
            {"n": args.n, "p": args.p, "src_t": src_t, "dst_t": args.t, "map": label},
            {
                "ok": report.ok,
                "failing_pair": list(report.failing_pair or ()),
                "defect": str(report.defect) if report.defect else None,
            },
            report.ok,
            t0,
        )
    ]


def _cmd_growth_estimate(args):
    t0 = time.perf_counter()
    if args.series == "-":
        series = GrowthSeries.from_text(sys.stdin.read())
    else:
        series = GrowthSeries.from_file(args.series)
    est = degree_estimate(series)
    records = [
        timed_record(
            "growth.degree",
            {"series": args.series, "points": len(series)},
            {
                "degree": est.label,
                "raw": round(est.raw, 4),
                "residual": round(est.fit_residual, 6),
                "exact": est.exact,
            },
            True,
            t0,
        )
    ]
    t0 = time.perf_counter()
    rs = series.rs
    if len(series) >= 4 and all(b - a == 1 for a, b in zip(rs, rs[1:])):
        fit = slope_extract(series)
        records.append(
            timed_record(
                "growth.slope",
                {"series": args.series},
                {
                    "slope": fit.slope if fit else "nonlinear",
                    "offset": fit.offset if fit else None,
                },
                True,
                t0,
            )
        )
    return records


def _cmd_eval(args):
    t0 = time.perf_counter()
    node = parse(args.expr, args.context)
    if args.context == "field":
        size = args.primes or max(1, max_symbol_index(node, "radical"))
        value = to_field(node, PrimeBasis.first(size))
    elif args.context == "group":
        value = to_group(node)
    elif args.context == "twisted":
        needed = max(
            max_symbol_index(node, "radical"), max_symbol_index(node, "xgen"), 1
        )
        value = to_twisted(node, PrimeBasis.first(args.primes or needed))
    else:
        n = args.n or max(1, max_symbol_index(node, "xgen"))
        value = to_quantum(node, QAlgebra(n, CycField(args.p, args.t)))
    return [
        timed_record(
            "parse.eval",
            {"context": args.context, "expr": args.expr},
            {"canonical": str(value)},
            True,
            t0,
        )
    ]


def _cmd_verify(args):
    params = {}
    for key in ("n", "p", "t", "rmax"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    return run_campaign(args.campaign, params, seed=args.seed)


# --- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("human", "machine"), default="human",
        help="report format (default: human)",
    )
    common.add_argument("--out", metavar="FILE", help="write the report to FILE")

    top = argparse.ArgumentParser(
        prog="gkbench",
        description="Exact-arithmetic workbench: twisted group rings, quantum "
        "affine spaces, and growth-degree statistics.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    gamma = sub.add_parser("gamma", help="gamma-series coefficient tools")
    gsub = gamma.add_subparsers(dest="subcommand", required=True)

    g_coeff = gsub.add_parser("coeff", parents=[common], help="coefficient of a group word in gamma^n")
    g_coeff.add_argument("--power", type=int, required=True)
    g_coeff.add_argument("target", help="group word, e.g. 'x1^-1*x2^-1'")
    g_coeff.set_defaults(handler=_cmd_gamma_coeff)

    g_wit = gsub.add_parser("witness", parents=[common], help="triangular independence witness")
    g_wit.add_argument("--degree", type=int, required=True)
    g_wit.set_defaults(handler=_cmd_gamma_witness)

    g_growth = gsub.add_parser("growth", parents=[common], help="affine growth of the gamma model")
    g_growth.add_argument("--n", type=int, required=True, help="number of prime/generator pairs")
    g_growth.add_argument("--rmax", type=int)
    g_growth.add_argument("--series-out", metavar="FILE", help="also write r,dim lines to FILE")
    g_growth.set_defaults(handler=_cmd_gamma_growth)

    quantum = sub.add_parser("quantum", help="quantum affine space tools")
    qsub = quantum.add_subparsers(dest="subcommand", required=True)

    def _q(parser_name, help_text):
        p = qsub.add_parser(parser_name, parents=[common], help=help_text)
        p.add_argument("--n", type=int, required=True, help="number of generators")
        p.add_argument("--p", type=int, default=2, help="base prime (default 2)")
        p.add_argument("--t", type=int, default=1, help="tower level (default 1)")
        return p

    q_nf = _q("nf", "normal form of a word or polynomial")
    q_nf.add_argument("expr")
    q_nf.set_defaults(handler=_cmd_quantum_nf)

    q_mul = _q("mul", "product of two polynomials")
    q_mul.add_argument("lhs")
    q_mul.add_argument("rhs")
    q_mul.set_defaults(handler=_cmd_quantum_mul)

    q_growth = _q("growth", "dimension growth and degree estimate")
    q_growth.add_argument("--rmax", type=int)
    q_growth.add_argument("--series-out", metavar="FILE")
    q_growth.set_defaults(handler=_cmd_quantum_growth)

    q_hom = _q("hom-check", "does x_i -> image extend to a ring map?")
    q_hom.add_argument("--src-t", type=int, help="source tower level (default t-1)")
    q_hom.add_argument(
        "--images", help="semicolon-separated generator images (default x_i -> x_i^p)"
    )
    q_hom.set_defaults(handler=_cmd_quantum_hom_check)

    growth = sub.add_parser("growth", help="degree statistics of dimension series")
    grsub = growth.add_subparsers(dest="subcommand", required=True)
    gr_est = grsub.add_parser(
        "estimate", parents=[common], help="estimate the growth degree of an r,dim file"
    )
    gr_est.add_argument("series", help="file of 'r,dim' lines, or - for stdin")
    gr_est.set_defaults(handler=_cmd_growth_estimate)

    ev = sub.add_parser("eval", parents=[common], help="parse and canonicalize an expression")
    ev.add_argument("--context", choices=("field", "group", "twisted", "quantum"), required=True)
    ev.add_argument("--primes", type=int, help="basis size for field/twisted contexts")
    ev.add_argument("--n", type=int, help="generator count for quantum context")
    ev.add_argument("--p", type=int, default=2)
    ev.add_argument("--t", type=int, default=1)
    ev.add_argument("expr")
    ev.set_defaults(handler=_cmd_eval)

    ver = sub.add_parser("verify", parents=[common], help="run a verification campaign")
    ver.add_argument("campaign", help=f"one of: {', '.join(campaign_names())}")
    ver.add_argument("--n", type=int)
    ver.add_argument("--p", type=int)
    ver.add_argument("--t", type=int)
    ver.add_argument("--rmax", type=int)
    ver.add_argument("--seed", type=int, default=0)
    ver.set_defaults(handler=_cmd_verify)

    return top


def main(argv=None) -> int:
    budget.reset()
    args = build_parser().parse_args(argv)
    try:
        records = args.handler(args)
    except budget.WorkBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValueError, IndexError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = emit(records, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all_passed(records) else 1


if __name__ == "__main__":
    sys.exit(main())
