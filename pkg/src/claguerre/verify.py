"""Self-check suites behind the ``verify`` subcommand.

Every suite re-derives an identity along an independent route and compares.
Randomized suites draw from a fixed seed so repeated runs are identical.
Failures come back as report entries rather than exceptions, and the report
maps 1:1 onto process exit status.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import integrate, laplace
from .alpha_calc import (
    ExpPoly,
    ReducedPoly,
    d_alpha_n,
    d_alpha_numeric,
    from_x_view,
    x_view,
)
from .figures import FIGURES
from .laguerre import (
    assoc_closed,
    assoc_from_derivative,
    assoc_rodrigues,
    generating_series,
    laguerre_closed,
    laguerre_rodrigues,
    ode_residual,
    values_at_zero,
)
from .tables import build_table

__all__ = [
    "SUITES",
    "SuiteResult",
    "VerifyReport",
    "classical_laguerre",
    "random_exppoly",
    "run_suites",
    "scope_names",
]

_SEED = 0x1A9


class CheckFailure(AssertionError):
    pass


def _ensure(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailure(message)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    entries: tuple[SuiteResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def exit_code(self) -> int:
        return 0 if self.all_passed else 1


def classical_laguerre(n: int, m: int, x: float) -> float:
    """Classical associated Laguerre value by the three-term recurrence.

    (k+1) L_{k+1} = (2k+1+m-x) L_k - (k+m) L_{k-1}, seeded with 1 and
    1+m-x.  Used purely as an oracle against the alpha = 1 evaluation path.
    """
    prev, cur = 0.0, 1.0
    for k in range(n):
        prev, cur = cur, ((2 * k + 1 + m - x) * cur - (k + m) * prev) / (k + 1)
    return cur


def random_exppoly(
    rng: random.Random,
    rates=(Fraction(-2), Fraction(-1), Fraction(0), Fraction(1)),
    max_degree: int = 6,
    max_terms: int = 3,
) -> ExpPoly:
    terms = []
    for rate in rng.sample(list(rates), k=rng.randint(1, min(max_terms, len(rates)))):
        degree = rng.randint(0, max_degree)
        coeffs = [
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(degree + 1)
        ]
        terms.append((Fraction(rate), ReducedPoly(coeffs)))
    return ExpPoly(terms)


def _random_poly(rng: random.Random, max_degree: int = 6) -> ReducedPoly:
    degree = rng.randint(0, max_degree)
    return ReducedPoly(
        Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(degree + 1)
    )


# -- alpha_calc ---------------------------------------------------------------


def _suite_product_rule() -> str:
    rng = random.Random(_SEED)
    for _ in range(40):
        p, q = random_exppoly(rng), random_exppoly(rng)
        lhs = (p * q).d_alpha()
        rhs = p.d_alpha() * q + p * q.d_alpha()
        _ensure(lhs == rhs, f"product rule broken for {p} and {q}")
    return "40 random pairs, exact"


def _suite_leibniz() -> str:
    rng = random.Random(_SEED + 1)
    checks = 0
    for _ in range(12):
        f = random_exppoly(rng, max_degree=3, max_terms=2)
        g = random_exppoly(rng, max_degree=3, max_terms=2)
        for n in range(6):
            lhs = d_alpha_n(f * g, n)
            rhs = ExpPoly()
            for k in range(n + 1):
                rhs = rhs + math.comb(n, k) * (
                    d_alpha_n(f, n - k) * d_alpha_n(g, k)
                )
            _ensure(lhs == rhs, f"binomial expansion broken at n={n}")
            checks += 1
    return f"{checks} expansions up to order 5, exact"


def _suite_numeric_derivative() -> str:
    checks = 0
    for n in range(6):
        poly = laguerre_closed(n)
        exact = poly.deriv()
        for alpha in (0.25, 0.5, 0.75, 1.0):
            for x in (0.5, 1.0, 2.0):
                want = exact.eval(x, alpha)
                f = lambda t: poly.eval(t, alpha)
                e1 = abs(d_alpha_numeric(f, x, alpha, h=0.05) - want)
                e2 = abs(d_alpha_numeric(f, x, alpha, h=0.025) - want)
                if e1 <= 1e-12 and e2 <= 1e-12:
                    checks += 1
                    continue
                _ensure(
                    e1 / e2 >= 3.5,
                    f"halving h only cut the error {e1:.3e} -> {e2:.3e} "
                    f"(n={n}, alpha={alpha}, x={x})",
                )
                checks += 1
    return f"{checks} points, error ratio >= 3.5 under halving"


def _suite_canonical_idempotence() -> str:
    rng = random.Random(_SEED + 2)
    for _ in range(60):
        p = _random_poly(rng)
        _ensure(ReducedPoly(p.coeffs) == p, "polynomial re-canonicalization moved")
        e = random_exppoly(rng)
        _ensure(ExpPoly(e.terms) == e, "exp-polynomial re-canonicalization moved")
    return "60 random values, rebuild is the identity"


def _suite_x_view_round_trip() -> str:
    rng = random.Random(_SEED + 3)
    for _ in range(60):
        p = _random_poly(rng, max_degree=8)
        _ensure(from_x_view(x_view(p)) == p, f"x-view round trip broke on {p}")
    return "60 random polynomials, exact round trip"


# -- laguerre -----------------------------------------------------------------


def _suite_triple_construction() -> str:
    for n in range(13):
        closed = laguerre_closed(n)
        _ensure(laguerre_rodrigues(n) == closed, f"Rodrigues route differs at n={n}")
        _ensure(
            laplace.solve_laguerre_ode(n) == closed,
            f"transform route differs at n={n}",
        )
    return "n <= 12, three construction routes identical"


def _suite_assoc_triple() -> str:
    for n in range(9):
        for m in range(5):
            closed = assoc_closed(n, m)
            _ensure(
                assoc_from_derivative(n, m) == closed,
                f"derivative route differs at (n={n}, m={m})",
            )
            _ensure(
                assoc_rodrigues(n, m) == closed,
                f"Rodrigues route differs at (n={n}, m={m})",
            )
    return "n <= 8, m <= 4, three construction routes identical"


def _suite_ode_annihilation() -> str:
    for n in range(11):
        for m in range(5):
            residual = ode_residual(assoc_closed(n, m), n, m)
            _ensure(residual.is_zero, f"residual {residual} at (n={n}, m={m})")
    return "n <= 10, m <= 4, residual identically zero"


def _suite_generating_coefficients() -> str:
    for m in range(4):
        expansion = generating_series(m, 10)
        for n in range(11):
            _ensure(
                expansion[n] == assoc_closed(n, m),
                f"series coefficient differs at (n={n}, m={m})",
            )
    return "orders m <= 3 to t^10, coefficients exact"


def _suite_zero_values() -> str:
    for n in range(13):
        got = values_at_zero(n)
        want = (Fraction(1), Fraction(-n), Fraction(n * (n - 1), 2))
        _ensure(got == want, f"values at zero {got} != {want} for n={n}")
    return "n <= 12, (1, -n, n(n-1)/2) exact"


def _suite_classical_oracle() -> str:
    for n in range(13):
        poly = laguerre_closed(n)
        for x in (0.1, 0.5, 1.0, 2.0, 5.0):
            got = poly.eval(x, 1.0)
            want = classical_laguerre(n, 0, x)
            _ensure(
                abs(got - want) <= 1e-10,
                f"alpha=1 value {got} vs recurrence {want} at (n={n}, x={x})",
            )
    return "n <= 12 against the three-term recurrence, 1e-10"


def _suite_generating_numeric() -> str:
    t = 0.3
    for alpha in (0.5, 1.0):
        for x in (0.5, 1.0):
            u = x**alpha / alpha
            total = math.fsum(
                laguerre_closed(n).eval(x, alpha) * t**n for n in range(26)
            )
            closed = math.exp(-u * t / (1 - t)) / (1 - t)
            _ensure(
                abs(total - closed) <= 1e-8,
                f"partial sum {total} vs closed form {closed} at "
                f"(alpha={alpha}, x={x})",
            )
    return "partial sums to t^25 at t=0.3 within 1e-8"


# -- laplace ------------------------------------------------------------------

_ROUND_TRIP_RATES = (
    Fraction(-3),
    Fraction(-2),
    Fraction(-1),
    Fraction(0),
    Fraction(1, 2),
)


def _suite_round_trip() -> str:
    rng = random.Random(_SEED + 4)
    for _ in range(40):
        p = random_exppoly(rng, rates=_ROUND_TRIP_RATES, max_degree=8)
        _ensure(
            laplace.inverse(laplace.transform(p)) == p,
            f"round trip moved {p}",
        )
    return "40 random exp-polynomials, inverse(transform) exact"


def _suite_linearity() -> str:
    rng = random.Random(_SEED + 5)
    for _ in range(40):
        p, q = random_exppoly(rng), random_exppoly(rng)
        a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        b = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        lhs = laplace.transform(a * p + b * q)
        rhs = a * laplace.transform(p) + b * laplace.transform(q)
        _ensure(lhs == rhs, "linearity broken")
    return "40 random rational combinations, exact"


def _suite_shift() -> str:
    rng = random.Random(_SEED + 6)
    for a in (Fraction(1), Fraction(2), Fraction(1, 2)):
        for _ in range(15):
            p = random_exppoly(rng)
            lhs = laplace.transform(ExpPoly.exp(-a) * p)
            rhs = laplace.transform(p).shifted(a)
            _ensure(lhs == rhs, f"shift by {a} broken for {p}")
    return "a in {1, 2, 1/2}, exact partial-fraction identity"


def _suite_u_multiplication() -> str:
    rng = random.Random(_SEED + 7)
    for _ in range(15):
        p = random_exppoly(rng)
        T = laplace.transform(p)
        for n in range(5):
            lhs = laplace.transform(ExpPoly.from_poly(ReducedPoly.monomial(n)) * p)
            rhs = (-1) ** n * T.d_ds(n)
            _ensure(lhs == rhs, f"u^{n} multiplication rule broken")
    return "orders n <= 4, (-1)^n d^n/ds^n exact"


def _suite_derivative_rule() -> str:
    rng = random.Random(_SEED + 8)
    for _ in range(40):
        p = random_exppoly(rng)
        lhs = laplace.transform(p.d_alpha())
        rhs = laplace.derivative_rule(laplace.transform(p), p.value_at_zero())
        _ensure(lhs == rhs, f"derivative rule broken for {p}")
    return "40 random exp-polynomials, s*F - f(0) exact"


def _named_pair_cases():
    return (
        (laplace.NamedSignal("one"), 0.75, (0.5, 1.0, 2.0, 4.0, 8.0), 1e-8),
        (laplace.NamedSignal("power_p", p=0.5), 0.5, (1.0, 2.0, 3.0, 5.0, 8.0), 1e-8),
        (laplace.NamedSignal("power_p", p=1.5), 0.5, (1.0, 2.0, 3.0, 5.0, 8.0), 1e-8),
        (laplace.NamedSignal("power_p", p=2.5), 0.5, (1.0, 2.0, 3.0, 5.0, 8.0), 1e-8),
        (laplace.NamedSignal("power_p", p=3.0), 1.0, (1.0, 2.0, 3.0, 5.0, 8.0), 1e-8),
        (laplace.NamedSignal("exp_u"), 0.5, (1.5, 2.0, 3.0, 5.0, 8.0), 1e-8),
        (laplace.NamedSignal("sin_wu", omega=1.0), 0.5, (1.0, 1.5, 2.0, 4.0, 8.0), 1e-6),
        (laplace.NamedSignal("cos_wu", omega=1.0), 0.5, (1.0, 1.5, 2.0, 4.0, 8.0), 1e-6),
    )


def _adaptive_transform_quad(g, s: float, rules: dict[int, object], tol: float) -> float:
    """Escalate the rule order until two estimates agree within tol/10."""
    previous = None
    for order in (16, 32, 48):
        rule = rules.get(order)
        if rule is None:
            rule = rules[order] = integrate.gauss_laguerre(order)
        value = integrate.quad_transform(g, s, rule)
        if previous is not None and abs(value - previous) <= tol / 10:
            return value
        previous = value
    return previous


def _suite_named_pairs() -> str:
    rules: dict[int, object] = {}
    checks = 0
    for sig, alpha, grid, tol in _named_pair_cases():
        F = laplace.transform_named(sig, alpha)
        g = sig.reduced(alpha)
        for s in grid:
            numeric = _adaptive_transform_quad(g, s, rules, tol)
            closed = F(s)
            _ensure(
                abs(numeric - closed) <= tol,
                f"{sig.kind} at s={s}: quadrature {numeric} vs closed {closed}",
            )
            checks += 1
    return f"{checks} (signal, s) pairs against quadrature"


def _suite_s_domain_residual() -> str:
    for n in range(13):
        residual = laplace.s_domain_residual(laplace.laguerre_transform(n), n)
        _ensure(residual.is_zero, f"nonzero residual {residual} at n={n}")
    return "n <= 12, expanded (s-1)^n/s^(n+1) annihilates the operator"


# -- integrate ----------------------------------------------------------------


def _suite_exact_vs_quadrature() -> str:
    rng = random.Random(_SEED + 9)
    # order 20 truncates at 1.3e-8 relative on u^10 * exp(-u/2), the slowest
    # admissible decay at the highest admissible degree, and signed
    # coefficients can cancel the exact moment far below the per-term error
    # floor; order 32 holds the 1e-8 budget with a 47x margin over 800
    # measured draw/alpha combinations
    rule = integrate.gauss_laguerre(32)
    decaying = (Fraction(-1, 2), Fraction(-1), Fraction(-2), Fraction(-3))
    for _ in range(10):
        p = random_exppoly(rng, rates=decaying, max_degree=10)
        want = integrate.moment_exact(p)
        for alpha in (0.25, 0.5, 0.75, 1.0):
            f = lambda x: p.eval(x, alpha)
            got = integrate.quad_dalpha(f, alpha, rule)
            _ensure(
                abs(got - float(want)) <= 1e-8 * (1 + abs(float(want))),
                f"quadrature {got} vs exact {want} at alpha={alpha} for {p}",
            )
    return "10 random integrands x 4 orders, 1e-8 relative"


def _suite_alpha_independence() -> str:
    rule = integrate.gauss_laguerre(20)
    integrands = (
        ExpPoly.exp(-1, laguerre_closed(2) * laguerre_closed(2)),
        ExpPoly.exp(-1, ReducedPoly((1, 1, Fraction(1, 2)))),
        ExpPoly.exp(-2, ReducedPoly.monomial(3)),
    )
    for p in integrands:
        values = []
        for alpha in (0.25, 0.5, 0.75, 1.0):
            f = lambda x: p.eval(x, alpha)
            values.append(integrate.quad_dalpha(f, alpha, rule))
        spread = max(values) - min(values)
        _ensure(
            spread <= 1e-8 * (1 + max(abs(v) for v in values)),
            f"alpha dependence {spread} for {p}",
        )
    return "3 integrands x 4 orders, spread below 1e-8"


def _suite_orthogonality_matrix() -> str:
    for i in range(11):
        for j in range(11):
            value = integrate.orthonormality(i, j)
            want = Fraction(1 if i == j else 0)
            _ensure(value == want, f"entry ({i},{j}) = {value}")
    return "11x11 weighted product matrix is exactly the identity"


def _suite_gauss_exactness() -> str:
    for order in (5, 10, 20):
        rule = integrate.gauss_laguerre(order)
        for k in range(2 * order):
            got = math.fsum(
                w * u**k for u, w in zip(rule.nodes, rule.weights)
            )
            want = float(math.factorial(k))
            _ensure(
                abs(got - want) <= 1e-10 * want,
                f"moment u^{k} off by {abs(got - want) / want:.2e} at order {order}",
            )
    return "orders 5, 10, 20 reproduce k! for k <= 2N-1 at 1e-10 relative"


# -- cli ----------------------------------------------------------------------

_FIXTURE_ALPHAS = (0.5, 0.75, 1.0)


def _figure_table_values(fig):
    table = build_table(fig.n, fig.m, _FIXTURE_ALPHAS, 0.0, 4.0, 5)
    parsed = [
        [float(cell) for cell in line.split(",")]
        for line in table.to_csv().strip().split("\n")[1:]
    ]
    return parsed


def _suite_figure_fixtures() -> str:
    checks = 0
    for fig in FIGURES:
        for row in _figure_table_values(fig):
            x = row[0]
            for column, alpha in enumerate(_FIXTURE_ALPHAS, start=1):
                want = fig.formula(x, alpha)
                _ensure(
                    abs(row[column] - want) <= 1e-12,
                    f"figure {fig.number} at (x={x}, alpha={alpha}): "
                    f"table {row[column]} vs formula {want}",
                )
                checks += 1
            classical = classical_laguerre(fig.n, fig.m, x)
            _ensure(
                abs(row[-1] - classical) <= 1e-10,
                f"figure {fig.number} at x={x}: alpha=1 column {row[-1]} "
                f"vs classical {classical}",
            )
    return f"{checks} fixture points across 11 figures, 1e-12"


def _suite_csv_determinism() -> str:
    first = build_table(3, 1, (0.5, 1.0), 0.0, 6.0, 40).to_csv()
    second = build_table(3, 1, (0.5, 1.0), 0.0, 6.0, 40).to_csv()
    _ensure(first == second, "repeated renders differ")
    _ensure("\r" not in first, "carriage return in output")
    _ensure(first.endswith("\n"), "missing trailing newline")
    return "byte-identical renders, LF line endings"


SUITES: dict[str, tuple[tuple[str, object], ...]] = {
    "alpha_calc": (
        ("product-rule", _suite_product_rule),
        ("leibniz-rule", _suite_leibniz),
        ("numeric-derivative-order", _suite_numeric_derivative),
        ("canonical-idempotence", _suite_canonical_idempotence),
        ("x-view-round-trip", _suite_x_view_round_trip),
    ),
    "laguerre": (
        ("triple-construction", _suite_triple_construction),
        ("assoc-triple", _suite_assoc_triple),
        ("ode-annihilation", _suite_ode_annihilation),
        ("generating-coefficients", _suite_generating_coefficients),
        ("zero-values", _suite_zero_values),
        ("classical-oracle-alpha1", _suite_classical_oracle),
        ("generating-numeric-sum", _suite_generating_numeric),
    ),
    "laplace": (
        ("round-trip", _suite_round_trip),
        ("linearity", _suite_linearity),
        ("shift", _suite_shift),
        ("u-multiplication", _suite_u_multiplication),
        ("derivative-rule", _suite_derivative_rule),
        ("named-pair-quadrature", _suite_named_pairs),
        ("s-domain-residual", _suite_s_domain_residual),
    ),
    "integrate": (
        ("exact-vs-quadrature", _suite_exact_vs_quadrature),
        ("alpha-independence", _suite_alpha_independence),
        ("orthogonality-identity-11x11", _suite_orthogonality_matrix),
        ("gauss-laguerre-exactness", _suite_gauss_exactness),
    ),
    "cli": (
        ("figure-fixtures", _suite_figure_fixtures),
        ("csv-determinism", _suite_csv_determinism),
    ),
}


def scope_names() -> tuple[str, ...]:
    return ("all",) + tuple(SUITES)


def run_suites(scope: str = "all") -> VerifyReport:
    """Run one module's suites, or everything; failures become entries."""
    if scope == "all":
        modules = tuple(SUITES)
    elif scope in SUITES:
        modules = (scope,)
    else:
        raise ValueError(f"unknown scope {scope!r}; use one of {scope_names()}")
    entries = []
    for module in modules:
        for name, runner in SUITES[module]:
            try:
                detail = runner()
                entries.append(SuiteResult(f"{module}/{name}", True, detail))
            except AssertionError as exc:
                entries.append(SuiteResult(f"{module}/{name}", False, str(exc)))
            except Exception as exc:  # report, never crash the driver
                entries.append(
                    SuiteResult(f"{module}/{name}", False, f"{type(exc).__name__}: {exc}")
                )
    return VerifyReport(tuple(entries))
