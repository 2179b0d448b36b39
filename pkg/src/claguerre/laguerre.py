"""Conformable Laguerre and associated Laguerre polynomials.

Each polynomial has several independent constructions, kept deliberately
separate so they can cross-check one another exactly:

* explicit rational coefficients (``laguerre_closed`` / ``assoc_closed``),
* iterated conformable derivatives of the weighted monomial
  u**n * exp(-u) (the Rodrigues route),
* the m-fold derivative relation linking associated and plain polynomials,
* a truncated generating-function expansion in an auxiliary variable t.

A fifth route, termwise inversion of the s-domain solution of the defining
differential equation, lives in :mod:`claguerre.laplace`.

With the normalization used here (constant term 1 for the plain family) the
polynomials satisfy u*p'' + (1 + m - u)*p' + n*p = 0 and are orthonormal
against exp(-u) du on [0, inf); see :mod:`claguerre.integrate`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .alpha_calc import ExpPoly, ReducedPoly, d_alpha_n

__all__ = [
    "GeneratingExpansion",
    "LaguerreIndex",
    "assoc_closed",
    "assoc_from_derivative",
    "assoc_rodrigues",
    "generating_series",
    "laguerre_closed",
    "laguerre_rodrigues",
    "ode_residual",
    "values_at_zero",
]


@dataclass(frozen=True)
class LaguerreIndex:
    """Degree n and association order m (m = 0 for the plain family)."""

    n: int
    m: int = 0

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 0):
            raise ValueError(f"degree must be a nonnegative integer, got {self.n!r}")
        if not (isinstance(self.m, int) and self.m >= 0):
            raise ValueError(f"order must be a nonnegative integer, got {self.m!r}")


def _check_index(n: int, m: int = 0) -> None:
    LaguerreIndex(n, m)


def laguerre_closed(n: int) -> ReducedPoly:
    """Degree-n polynomial with coefficient of u**k equal to
    (-1)**k * n! / ((n-k)! * (k!)**2)."""
    _check_index(n)
    return ReducedPoly(
        Fraction((-1) ** k * factorial(n), factorial(n - k) * factorial(k) ** 2)
        for k in range(n + 1)
    )


def laguerre_rodrigues(n: int) -> ReducedPoly:
    """Rodrigues construction: exp(u)/n! times the n-fold conformable
    derivative of u**n * exp(-u).

    The alpha**n prefactor of the x-space statement cancels exactly against
    the alpha**(-n) hidden in u**n, so the whole computation stays in the
    rational core.  Any surviving exponential term signals an algebra bug.
    """
    _check_index(n)
    seed = ExpPoly.exp(-1, ReducedPoly.monomial(n))
    derived = d_alpha_n(seed, n)
    flattened = (derived * ExpPoly.exp(1)).as_poly()
    return flattened * Fraction(1, factorial(n))


def assoc_closed(n: int, m: int) -> ReducedPoly:
    """Associated polynomial with coefficient of u**r equal to
    (-1)**r * (n+m)! / ((n-r)! * (r+m)! * r!); reduces to
    :func:`laguerre_closed` at m = 0."""
    _check_index(n, m)
    return ReducedPoly(
        Fraction(
            (-1) ** r * factorial(n + m),
            factorial(n - r) * factorial(r + m) * factorial(r),
        )
        for r in range(n + 1)
    )


def assoc_from_derivative(n: int, m: int) -> ReducedPoly:
    """(-1)**m times the m-fold conformable derivative of the plain
    polynomial of degree n + m."""
    _check_index(n, m)
    p = laguerre_closed(n + m).deriv(m)
    return p if m % 2 == 0 else -p


def assoc_rodrigues(n: int, m: int) -> ReducedPoly:
    """Associated Rodrigues construction.

    Computes the n-fold conformable derivative of u**(n+m) * exp(-u),
    strips the weight, and divides by u**m and n!.  The alpha prefactors
    (alpha**(n+m) from the monomial against alpha**(-n-m) from the stated
    prefactor) cancel exactly.  The derivative is divisible by u**m as a
    polynomial identity; failure of that division signals an algebra bug.
    """
    _check_index(n, m)
    seed = ExpPoly.exp(-1, ReducedPoly.monomial(n + m))
    flattened = (d_alpha_n(seed, n) * ExpPoly.exp(1)).as_poly()
    return flattened.divide_by_u(m) * Fraction(1, factorial(n))


def ode_residual(p: ReducedPoly, n: int, m: int = 0) -> ReducedPoly:
    """Residual of the defining equation in reduced form.

    In the u variable the conformable operator collapses to
    alpha * (u*p'' + (1 + m - u)*p' + n*p); the global alpha factor is
    nonzero and is divided out, so the residual is zero exactly when p
    solves the equation.
    """
    _check_index(n, m)
    u = ReducedPoly.monomial(1)
    return u * p.deriv(2) + ReducedPoly((1 + m, -1)) * p.deriv() + n * p


@dataclass(frozen=True)
class GeneratingExpansion:
    """Truncated expansion in t; entry n is the coefficient polynomial of t**n."""

    order: int
    coefficient_polys: tuple[ReducedPoly, ...]

    def __post_init__(self):
        if len(self.coefficient_polys) != self.order + 1:
            raise ValueError("expansion must hold order + 1 coefficients")
        for k, p in enumerate(self.coefficient_polys):
            if p.degree > k:
                raise ValueError(f"coefficient of t^{k} has degree {p.degree}")

    def __getitem__(self, n: int) -> ReducedPoly:
        return self.coefficient_polys[n]


def generating_series(m: int, order: int) -> GeneratingExpansion:
    """Expand exp(-u*t/(1-t)) / (1-t)**(m+1) as a power series in t.

    Both factors are expanded with exact rational arithmetic: the geometric
    factor termwise, the exponential through the standard recurrence for the
    exponential of a series with zero constant term.  The coefficient of t**n
    equals the associated polynomial of index (n, m); this route never touches
    the closed-form coefficients, so the two act as independent checks.
    """
    _check_index(0, m)
    if order < 1:
        raise ValueError("order must be at least 1")
    minus_u = ReducedPoly((0, -1))
    # E = exp(A) with A = -u * (t + t^2 + ...): n*E_n = sum_k k*a_k*E_{n-k}.
    exp_coeffs = [ReducedPoly.one()]
    for k in range(1, order + 1):
        acc = ReducedPoly()
        for j in range(1, k + 1):
            acc = acc + exp_coeffs[k - j] * Fraction(j, k)
        exp_coeffs.append(minus_u * acc)
    geometric = [Fraction(comb(j + m, m)) for j in range(order + 1)]
    out = []
    for k in range(order + 1):
        acc = ReducedPoly()
        for j in range(k + 1):
            acc = acc + exp_coeffs[k - j] * geometric[j]
        out.append(acc)
    return GeneratingExpansion(order, tuple(out))


def values_at_zero(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """(p(0), p'(0), p''(0)) for the degree-n polynomial, exactly.

    These are the conformable values at x = 0 as well, since the conformable
    derivative equals d/du on this class; they equal (1, -n, n*(n-1)/2).
    """
    _check_index(n)
    p = laguerre_closed(n)
    zero = Fraction(0)
    return p(zero), p.deriv()(zero), p.deriv(2)(zero)
