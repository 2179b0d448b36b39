"""Command-line front end.

Subcommands: ``eval`` (point values), ``table`` (CSV grids for plotting),
``transform`` (exact partial fractions and closed forms, with optional
numeric cross-check), ``solve`` (replay of the transform-domain derivation)
and ``verify`` (the self-check suites).  CSV goes to stdout, diagnostics to
stderr; exit codes are 0 for success, 1 for verification failure and 2 for
usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import integrate, laplace
from .alpha_calc import as_alpha, x_view_str
from .laguerre import laguerre_closed, assoc_closed
from .tables import build_table
from .verify import run_suites, scope_names

_DEFAULT_ALPHAS = "0.25,0.5,0.75,1.0"


def _parse_alphas(text: str) -> tuple[float, ...]:
    alphas = tuple(as_alpha(float(tok)) for tok in text.split(",") if tok.strip())
    if not alphas:
        raise ValueError("at least one alpha is required")
    return alphas


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _cmd_eval(args) -> int:
    try:
        alphas = _parse_alphas(args.alpha)
        if args.x < 0:
            raise ValueError("x must be nonnegative")
        poly = assoc_closed(args.n, args.m)
    except ValueError as exc:
        return _usage_error(str(exc))
    for a in alphas:
        value = poly.eval(args.x, a)
        print(f"L_{args.n}^{args.m}(alpha={a!r}, x={args.x!r}) = {value:.12g}")
    print(f"exact form: {x_view_str(poly)}")
    return 0


def _cmd_table(args) -> int:
    try:
        alphas = _parse_alphas(args.alpha)
        table = build_table(
            args.n, args.m, alphas, args.xmin, args.xmax, args.samples
        )
    except ValueError as exc:
        return _usage_error(str(exc))
    sys.stdout.write(table.to_csv())
    return 0


def _transform_quad_check(g, s: float, closed: float) -> None:
    rule = integrate.gauss_laguerre(48)
    numeric = integrate.quad_transform(g, s, rule)
    print(f"quadrature check: {numeric:.12g} (|diff| = {abs(numeric - closed):.3e})")


def _cmd_transform(args) -> int:
    tokens = args.expr
    try:
        alphas = _parse_alphas(args.alpha)
        if len(alphas) != 1:
            raise ValueError("transform takes a single alpha")
        alpha = alphas[0]
    except ValueError as exc:
        return _usage_error(str(exc))

    kind = tokens[0]
    if kind == "laguerre":
        if len(tokens) != 2:
            return _usage_error("usage: transform laguerre <n>")
        try:
            n = int(tokens[1])
            T = laplace.laguerre_transform(n)
        except ValueError as exc:
            return _usage_error(str(exc))
        print(f"Y(s) = (s-1)^{n}/s^{n + 1}")
        print(f"partial fractions: {T}")
        if args.s is not None:
            if args.s <= 0:
                return _usage_error("s must be positive for the numeric check")
            closed = T(args.s)
            print(f"value at s={args.s!r}: {closed:.12g}")
            signal = laplace.inverse(T)
            _transform_quad_check(signal.eval_u, args.s, closed)
        return 0

    try:
        if kind == "power_p":
            if len(tokens) != 2:
                raise ValueError("usage: transform power_p <p>")
            sig = laplace.NamedSignal(kind, p=float(tokens[1]))
        elif kind in ("sin_wu", "cos_wu"):
            omega = float(tokens[1]) if len(tokens) > 1 else 1.0
            sig = laplace.NamedSignal(kind, omega=omega)
        elif kind in ("one", "exp_u"):
            sig = laplace.NamedSignal(kind)
        else:
            raise ValueError(f"unknown expression {kind!r}")
    except ValueError as exc:
        return _usage_error(str(exc))

    F = laplace.transform_named(sig, alpha)
    print(f"transform: {sig.describe(alpha)}")
    if args.s is not None:
        try:
            closed = F(args.s)
        except ValueError as exc:
            return _usage_error(str(exc))
        print(f"value at s={args.s!r}: {closed:.12g}")
        _transform_quad_check(sig.reduced(alpha), args.s, closed)
    return 0


def _cmd_solve(args) -> int:
    n = args.n
    Y = laplace.laguerre_transform(n)
    print(f"n = {n}")
    print(f"s-domain equation: -s(s-1)*Y'(s) + ({n + 1} - s)*Y(s) = 0")
    print(f"closed form: Y(s) = (s-1)^{n}/s^{n + 1}")
    print(f"partial fractions: Y(s) = {Y}")
    residual = laplace.s_domain_residual(Y, n)
    print(f"s-domain residual: {residual} {'(exact)' if residual.is_zero else ''}")
    solution = laplace.inverse(Y).as_poly()
    print(f"inverse transform: y(u) = {solution}, u = x^a/a")
    print(f"x-view: {x_view_str(solution)}")
    if residual.is_zero and solution == laguerre_closed(n):
        print("match: exact")
        return 0
    print("match: MISMATCH against the direct coefficients")
    return 1


def _cmd_verify(args) -> int:
    report = run_suites(args.scope)
    for entry in report.entries:
        status = "PASS" if entry.passed else "FAIL"
        print(f"{status} {entry.name}: {entry.detail}")
    failed = sum(1 for e in report.entries if not e.passed)
    print(f"{len(report.entries) - failed}/{len(report.entries)} suites passed")
    return report.exit_code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="claguerre",
        description="Conformable Laguerre polynomials and their transform calculus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a polynomial at one point")
    p_eval.add_argument("--n", type=int, required=True, help="degree")
    p_eval.add_argument("--m", type=int, default=0, help="association order")
    p_eval.add_argument("--alpha", default=_DEFAULT_ALPHAS, help="comma list in (0, 1]")
    p_eval.add_argument("--x", type=float, required=True, help="evaluation point")
    p_eval.set_defaults(handler=_cmd_eval)

    p_table = sub.add_parser("table", help="emit a CSV sample grid")
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--m", type=int, default=0)
    p_table.add_argument("--alpha", default=_DEFAULT_ALPHAS)
    p_table.add_argument("--xmin", type=float, default=0.0)
    p_table.add_argument("--xmax", type=float, default=8.0)
    p_table.add_argument("--samples", type=int, default=200)
    p_table.set_defaults(handler=_cmd_table)

    p_transform = sub.add_parser(
        "transform",
        help="print a transform (one, power_p <p>, exp_u, sin_wu [w], "
        "cos_wu [w], laguerre <n>)",
    )
    p_transform.add_argument("expr", nargs="+")
    p_transform.add_argument("--alpha", default="1.0")
    p_transform.add_argument("--s", type=float, default=None,
                             help="also evaluate and cross-check at this s")
    p_transform.set_defaults(handler=_cmd_transform)

    p_solve = sub.add_parser("solve", help="replay the transform-domain derivation")
    p_solve.add_argument("--n", type=int, required=True)
    p_solve.set_defaults(handler=_cmd_solve)

    p_verify = sub.add_parser("verify", help="run the self-check suites")
    p_verify.add_argument("--scope", default="all", choices=scope_names())
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("eval", "solve") and args.n < 0:
            return _usage_error("n must be nonnegative")
        if getattr(args, "m", 0) < 0:
            return _usage_error("m must be nonnegative")
    except AttributeError:
        pass
    return args.handler(args)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
