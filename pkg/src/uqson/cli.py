"""Command-line front end.

Verbs: relations-verify, pbw-reduce, commrel-verify, assoc-fuzz, rep-build,
rep-verify, rep-commutant, embed-verify, psi-verify, params-sample.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or expression
syntax, 3 degenerate parameter or q value, 4 structural misuse (rank,
variant, index, dimension), 5 file or format trouble.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import djembed, jsonio, reps
from .coeffring import RootOfUnity
from .errors import (
    DegenerateDenominator,
    DegenerateParameter,
    DegenerateQ,
    DimensionMismatch,
    ExpressionSyntaxError,
    IndexOutOfRange,
    ParameterSamplingError,
    RankMismatch,
    SingularDenominator,
    TopRowShift,
    VariantMismatch,
    ZeroBase,
)
from .expr import evaluate_expression
from .pbw import (
    MINUS,
    PLUS,
    verify_commutation_relations,
    verify_defining_relations,
)
from .pbw.fuzz import associativity_fuzz

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_MISUSE = 4
EXIT_IO = 5

_DEGENERATE = (
    DegenerateParameter,
    DegenerateDenominator,
    SingularDenominator,
    DegenerateQ,
    ParameterSamplingError,
    ZeroBase,
)
_MISUSE = (
    RankMismatch,
    VariantMismatch,
    IndexOutOfRange,
    TopRowShift,
    DimensionMismatch,
)


def _bool_word(flag):
    return "true" if flag else "false"


def _print_exact_report(report):
    for entry in report:
        print(f"{entry['relation']}: exact-zero: {_bool_word(entry['exact_zero'])}")


def _default_rep_tol(dim):
    # double precision is comfortable at 1e-9; scale with size past 100
    return 1e-9 if dim <= 100 else 1e-9 * dim


def cmd_relations_verify(args):
    report = verify_defining_relations(args.n, args.variant)
    _print_exact_report(report)
    ok = all(entry["exact_zero"] for entry in report)
    print(
        f"relations-verify n={args.n} variant={args.variant}: "
        f"{'PASS' if ok else 'FAIL'} ({len(report)} relations)"
    )
    return EXIT_PASS if ok else EXIT_CHECK_FAILED


def cmd_commrel_verify(args):
    report = verify_commutation_relations(args.n, args.variant)
    _print_exact_report(report)
    ok = all(entry["exact_zero"] for entry in report)
    print(
        f"commrel-verify n={args.n} variant={args.variant}: "
        f"{'PASS' if ok else 'FAIL'} ({len(report)} identities)"
    )
    return EXIT_PASS if ok else EXIT_CHECK_FAILED


def cmd_pbw_reduce(args):
    variant = args.variant
    element = evaluate_expression(args.expression, args.n, variant=variant)
    print(str(element))
    return EXIT_PASS


def cmd_assoc_fuzz(args):
    report = associativity_fuzz(
        args.n, args.degree, args.trials, args.seed, args.variant
    )
    for failure in report["failures"]:
        print(f"FAIL trial {failure['trial']}: (a*b)*c != a*(b*c)")
        print(f"  a = {failure['a']}")
        print(f"  b = {failure['b']}")
        print(f"  c = {failure['c']}")
    print(
        f"assoc-fuzz n={args.n} degree={args.degree} trials={args.trials} "
        f"seed={args.seed} variant={args.variant}: "
        f"{'PASS' if report['pass'] else 'FAIL'}"
    )
    return EXIT_PASS if report["pass"] else EXIT_CHECK_FAILED


def cmd_rep_build(args):
    omega = jsonio.params_from_json(jsonio.load_json(args.params))
    reps.assert_generic(omega)
    ops = reps.build_representation(omega)
    jsonio.dump_json(jsonio.rep_to_json(ops), args.out)
    nnz = sum(len(op.entries) for op in ops)
    print(
        f"rep-build: n={omega.n} k={omega.order_k} dim={ops[0].dim} "
        f"generators={len(ops)} nonzeros={nnz} -> {args.out}"
    )
    return EXIT_PASS


def cmd_rep_verify(args):
    ops = jsonio.rep_from_json(jsonio.load_json(args.rep))
    root = RootOfUnity(args.q_order, args.q_t)
    dim = ops[0].dim if ops else 0
    tol = args.tol if args.tol is not None else _default_rep_tol(dim)
    report = reps.relation_residual(ops, root)
    worst = 0.0
    for entry in report:
        worst = max(worst, entry["residual"])
        print(f"{entry['relation']}: residual: {entry['residual']:.3e}")
    ok = worst < tol
    artifacts = list(report)
    if args.commutant:
        cdim = reps.commutant_dimension(ops)
        artifacts.append({"commutantDim": cdim})
        print(f"commutant-dim: {cdim}")
        ok = ok and cdim == 1
    if args.out:
        jsonio.dump_json(artifacts, args.out)
    print(f"rep-verify dim={dim} tol={tol:.3e}: {'PASS' if ok else 'FAIL'}")
    return EXIT_PASS if ok else EXIT_CHECK_FAILED


def cmd_rep_commutant(args):
    ops = jsonio.rep_from_json(jsonio.load_json(args.rep))
    cdim = reps.commutant_dimension(ops)
    print(f"commutant-dim: {cdim}")
    print(f"rep-commutant: {'PASS' if cdim == 1 else 'FAIL'} (irreducible iff 1)")
    return EXIT_PASS if cdim == 1 else EXIT_CHECK_FAILED


def cmd_embed_verify(args):
    report = djembed.verify_embedding(args.n)
    for entry in report:
        print(f"{entry['check']}: {'pass' if entry['pass'] else 'FAIL'}")
    ok = djembed.report_all_pass(report)
    if args.out:
        jsonio.dump_json(report, args.out)
    print(f"embed-verify n={args.n}: {'PASS' if ok else 'FAIL'} ({len(report)} checks)")
    return EXIT_PASS if ok else EXIT_CHECK_FAILED


def cmd_psi_verify(args):
    rng = random.Random(args.seed)
    report = []
    for i in range(args.samples):
        q = djembed.sample_generic_q(
            rng, on_circle=(i % 2 == 0), min_order=args.twoj + 1
        )
        report.extend(djembed.verify_psi(args.twoj, q, tol=args.tol))
    for entry in report:
        print(
            f"{entry['check']}: residual: {entry['residual']:.3e} "
            f"{'pass' if entry['pass'] else 'FAIL'}"
        )
    ok = djembed.report_all_pass(report)
    if args.out:
        jsonio.dump_json(report, args.out)
    print(
        f"psi-verify twoj={args.twoj} samples={args.samples} seed={args.seed} "
        f"tol={args.tol:.1e}: {'PASS' if ok else 'FAIL'}"
    )
    return EXIT_PASS if ok else EXIT_CHECK_FAILED


def cmd_params_sample(args):
    omega = reps.random_generic_params(args.n, args.order, args.seed, t=args.t)
    jsonio.dump_json(jsonio.params_to_json(omega), args.out)
    count = reps.parameter_count(args.n)
    print(
        f"params-sample: n={args.n} order={args.order} t={args.t} "
        f"seed={args.seed} parameters={count} -> {args.out}"
    )
    return EXIT_PASS


def build_parser():
    parser = argparse.ArgumentParser(
        prog="uqson",
        description="Verification and construction tools for the q-deformed "
        "orthogonal enveloping algebra.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_variant(p):
        p.add_argument(
            "--variant", choices=(PLUS, MINUS), default=PLUS,
            help="which bracket variant to use (default plus)",
        )

    p = sub.add_parser("relations-verify", help="check the defining relations symbolically")
    p.add_argument("--n", type=int, required=True)
    add_variant(p)
    p.set_defaults(func=cmd_relations_verify)

    p = sub.add_parser("pbw-reduce", help="print the normal form of an expression")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("expression")
    add_variant(p)
    p.set_defaults(func=cmd_pbw_reduce)

    p = sub.add_parser("commrel-verify", help="check the composite-bracket identities")
    p.add_argument("--n", type=int, required=True)
    add_variant(p)
    p.set_defaults(func=cmd_commrel_verify)

    p = sub.add_parser("assoc-fuzz", help="randomized associativity check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    add_variant(p)
    p.set_defaults(func=cmd_assoc_fuzz)

    p = sub.add_parser("rep-build", help="build representation matrices from parameters")
    p.add_argument("--params", required=True, help="parameter JSON file")
    p.add_argument("--out", required=True, help="output JSON dump")
    p.set_defaults(func=cmd_rep_build)

    p = sub.add_parser("rep-verify", help="check defining relations on a dumped representation")
    p.add_argument("--rep", required=True, help="representation JSON dump")
    p.add_argument("--q-order", type=int, required=True, dest="q_order")
    p.add_argument("--q-t", type=int, default=1, dest="q_t")
    p.add_argument("--tol", type=float, default=None,
                   help="residual tolerance (default 1e-9, scaled by dim past 100)")
    p.add_argument("--commutant", action="store_true",
                   help="also require commutant dimension 1")
    p.add_argument("--out", default=None, help="optional JSON report path")
    p.set_defaults(func=cmd_rep_verify)

    p = sub.add_parser("rep-commutant", help="commutant dimension of a dumped representation")
    p.add_argument("--rep", required=True)
    p.set_defaults(func=cmd_rep_commutant)

    p = sub.add_parser("embed-verify", help="check the special-linear embedding symbolically")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None, help="optional JSON report path")
    p.set_defaults(func=cmd_embed_verify)

    p = sub.add_parser("psi-verify", help="check the rank-3 composition on weight-basis irreps")
    p.add_argument("--twoj", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out", default=None, help="optional JSON report path")
    p.set_defaults(func=cmd_psi_verify)

    p = sub.add_parser("params-sample", help="sample generic representation parameters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, required=True, help="order k of the root of unity")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--t", type=int, default=1, help="which primitive root (exponent numerator)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_params_sample)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ExpressionSyntaxError as exc:
        print(f"error: {exc.msg if exc.msg else exc}", file=sys.stderr)
        return EXIT_USAGE
    except _DEGENERATE as exc:
        print(f"error: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except _MISUSE as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISUSE
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
