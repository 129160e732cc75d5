"""Command-line driver.

    kmink parse <expr>
    kmink eval <expr>
    kmink act <momentum-expr> <position-expr>
    kmink d <expr>
    kmink verify --suite <name> [--seed N] [--max-degree D]
                 [--gamma4 zero|unit:<lam>|gamma5:<lam>] [--json PATH]

Exit codes: 0 pass, 1 assertion failure, 2 usage or parse error.
KMINK_THREADS caps suite concurrency.
"""

from __future__ import annotations

import argparse
import sys

from . import dirac, suites
from .expr import ExprError, EvalError, evaluate, parse as parse_expr, render, render_value
from .minkowski import PositionElement
from .momentum import MomentumElement
from .scalars import ScalarValue


def _parse_gamma4(text):
    if text == "zero":
        return dirac.GAMMA4_ZERO
    for kind in ("unit", "gamma5"):
        if text.startswith(kind + ":"):
            lam = evaluate(parse_expr(text[len(kind) + 1:]))
            if not isinstance(lam, ScalarValue):
                raise ExprError("gamma4 coefficient must be a scalar expression")
            return dirac.Gamma4(kind, lam)
    raise ExprError(f"bad gamma4 choice {text!r}; use zero, unit:<lam> or gamma5:<lam>")


def _cmd_parse(args):
    ast = parse_expr(args.expr)
    print(render(ast))
    return 0


def _cmd_eval(args):
    value = evaluate(parse_expr(args.expr))
    print(render_value(value))
    return 0


def _cmd_act(args):
    from .action import act

    p = evaluate(parse_expr(args.momentum))
    a = evaluate(parse_expr(args.position))
    if isinstance(p, ScalarValue):
        p = MomentumElement.scalar(p)
    if isinstance(a, ScalarValue):
        a = PositionElement.scalar(a)
    if not isinstance(p, MomentumElement) or not isinstance(a, PositionElement):
        raise EvalError("act needs a momentum expression and a position expression")
    print(act(p, a).render())
    return 0


def _cmd_d(args):
    from .expr import _ext_d

    value = evaluate(parse_expr(args.expr))
    print(render_value(_ext_d(value)))
    return 0


def _cmd_verify(args):
    cfg = suites.RunConfig(seed=args.seed, max_degree=args.max_degree,
                           gamma4=_parse_gamma4(args.gamma4))
    records = suites.run_suite(args.suite, cfg)
    print(suites.render_table(records))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(suites.render_jsonl(records))
    return 1 if any(r.status == "fail" for r in records) else 0


def _load_gauge_config(path):
    from . import gauge

    with open(path, "r", encoding="utf-8") as handle:
        return gauge.read_config_text(handle.read())


def _eval_unitary(text):
    value = evaluate(parse_expr(text))
    if not isinstance(value, PositionElement):
        raise EvalError("the unitary must be a position expression")
    return value


def _cmd_gauge(args):
    from . import gauge

    cfg = _load_gauge_config(args.config)
    if args.gauge_verb == "fstrength":
        strength = gauge.field_strength(cfg, charged=args.charged)
        print(strength.render())
        return 0
    if args.gauge_verb == "transform":
        new_cfg = gauge.gauge_transform(cfg, _eval_unitary(args.unitary))
        for k in range(5):
            print(f"A{k} = {new_cfg.A[k].render()}")
        return 0
    if args.gauge_verb == "limit":
        residual = gauge.classical_limit(cfg)
        print(f"classical Lagrangian = {gauge.classical_lagrangian(cfg).render()}")
        print(f"kappa->infinity residual of -C/4 = {residual.render()}")
        return 0 if residual.is_zero() else 1
    # gauge verify: covariance suite for this configuration
    failures = 0
    unitaries = [_eval_unitary(u) for u in (args.unitary_list or ["W[1]", "W[2]"])]
    for idx, u in enumerate(unitaries):
        for label, residuals in (
            ("strength covariance (3.9)", gauge.check_f_covariance(cfg, u)),
            ("divergence covariance (3.13)",
             gauge.check_divergence_covariance(cfg, u)),
            ("invariant covariance (3.16)",
             gauge.check_invariant_covariance(cfg, u)),
        ):
            ok = not residuals
            failures += 0 if ok else 1
            mark = "PASS" if ok else "FAIL"
            print(f"[{mark}] U#{idx} {label}")
            if not ok:
                for key, value in residuals.items():
                    print(f"       residual {key}: {value.render()}")
    res_charged, res_literal = gauge.curvature_cross_check(cfg)
    print(f"[INFO] curvature two-route: charged-form residual "
          f"{'empty' if not res_charged else res_charged}; literal-form residual "
          f"{'empty' if not res_literal else 'nonzero (expected unless g = 1)'}")
    return 1 if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kmink",
        description="Exact symbolic verification engine for the kappa-Minkowski "
                    "algebra, its differential calculus, Dirac operators and the "
                    "deformed U(1) gauge theory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse an expression and print its canonical form")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("eval", help="evaluate an expression to canonical normal form")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("act", help="apply a momentum expression to a position expression")
    p.add_argument("momentum")
    p.add_argument("position")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("d", help="exterior derivative of an expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_d)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=list(suites.SUITE_NAMES) + ["all"])
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--gamma4", default="zero")
    p.add_argument("--json", default=None, help="write line-delimited records here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gauge", help="work with a gauge fixture file")
    gsub = p.add_subparsers(dest="gauge_verb", required=True)
    g = gsub.add_parser("fstrength", help="field strength of a configuration")
    g.add_argument("--config", required=True)
    g.add_argument("--charged", action="store_true",
                   help="carry the charge in the quadratic term")
    g.set_defaults(func=_cmd_gauge)
    g = gsub.add_parser("transform", help="gauge-transform a configuration")
    g.add_argument("--config", required=True)
    g.add_argument("--unitary", required=True, help="unitary expression, e.g. W[1]")
    g.set_defaults(func=_cmd_gauge)
    g = gsub.add_parser("verify", help="covariance checks for a configuration")
    g.add_argument("--config", required=True)
    g.add_argument("--unitary", dest="unitary_list", action="append",
                   help="unitary expression (repeatable; default W[1] and W[2])")
    g.set_defaults(func=_cmd_gauge)
    g = gsub.add_parser("limit", help="classical limit of a configuration")
    g.add_argument("--config", required=True)
    g.set_defaults(func=_cmd_gauge)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ExprError, EvalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
