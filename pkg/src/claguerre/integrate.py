"""Integration against the conformable measure x**(alpha-1) dx on [0, inf).

After the substitution u = x**alpha / alpha the measure is exactly du, so
everything integrates in u-space.  This is the one numerically load-bearing
choice in the package: the x-space weight is singular at 0 for alpha < 1,
while the u-space integrand is smooth, so quadrature never sees the branch
point.  Exact rational moments are the primary oracle; a Gauss-Laguerre rule
built here from scratch is the independent numeric one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .alpha_calc import ExpPoly, as_alpha
from .laguerre import laguerre_closed

__all__ = [
    "DivergenceError",
    "QuadratureRule",
    "RootFindingError",
    "gauss_laguerre",
    "moment_exact",
    "orthonormality",
    "quad_dalpha",
    "quad_transform",
]


class DivergenceError(ValueError):
    """The integrand does not decay, so the integral diverges."""


class RootFindingError(RuntimeError):
    """Node refinement failed to converge (indicates an implementation bug)."""


def moment_exact(f: ExpPoly) -> Fraction:
    """Exact integral of an exp-polynomial over [0, inf) in u-space.

    Termwise, integral of u**k * exp(r*u) du is k!/(-r)**(k+1), valid only
    for r < 0.  The value is the conformable integral of the rendered
    function for every order alpha at once; the substitution absorbs alpha.
    """
    f = ExpPoly._coerce(f)
    if f is None:
        raise TypeError("ExpPoly expected")
    total = Fraction(0)
    for rate, poly in f.terms:
        if rate >= 0:
            raise DivergenceError(f"rate {rate} >= 0, integral diverges")
        for k, c in enumerate(poly.coeffs):
            if c:
                total += c * Fraction(math.factorial(k)) / (-rate) ** (k + 1)
    return total


def orthonormality(n: int, m_index: int) -> Fraction:
    """Exact value of the weighted product integral; 1 on the diagonal, else 0."""
    product = laguerre_closed(n) * laguerre_closed(m_index)
    return moment_exact(ExpPoly.exp(-1, product))


def _laguerre_pair(n: int, x: float) -> tuple[float, float]:
    """(L_n(x), L_{n-1}(x)) for the classical polynomials, by recurrence."""
    prev, cur = 0.0, 1.0
    for k in range(n):
        prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
    return cur, prev


def _refine_root(n: int, lo: float, hi: float) -> float:
    """One zero of the classical degree-n polynomial inside (lo, hi).

    Bisection carries the bracket to floating-point resolution; a few
    safeguarded Newton steps (derivative from x*L' = n*(L - L_prev)) polish
    the result without ever leaving the bracket.
    """
    flo = _laguerre_pair(n, lo)[0]
    fhi = _laguerre_pair(n, hi)[0]
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise RootFindingError(f"no sign change in ({lo}, {hi}) for order {n}")
    for _ in range(30):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        fm = _laguerre_pair(n, mid)[0]
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    x = 0.5 * (lo + hi)
    for _ in range(20):
        value, prev = _laguerre_pair(n, x)
        slope = n * (value - prev) / x
        if slope == 0.0 or value == 0.0:
            return x
        step = value / slope
        candidate = x - step
        # the recurrence evaluates with ~1e-15 noise near a root, so a step
        # at that scale means the iterate sits on the noise floor
        if abs(step) <= 1e-14 * (1.0 + abs(x)):
            return candidate if lo < candidate < hi else x
        if not (lo < candidate < hi):
            candidate = 0.5 * (lo + hi)
        if candidate == x:
            return x
        # keep the bracket valid so a wild Newton step cannot escape
        fc = _laguerre_pair(n, candidate)[0]
        if (fc > 0.0) == (flo > 0.0):
            lo, flo = candidate, fc
        else:
            hi = candidate
        x = candidate
    raise RootFindingError(f"refinement stalled near {x} for order {n}")


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for integral_0^inf exp(-u) g(u) du.

    Nodes are strictly increasing, weights positive and summing to 1 within
    1e-12 (the zeroth moment); a rule of order N reproduces the moments of
    u**k for k <= 2N-1.
    """

    nodes: tuple[float, ...]
    weights: tuple[float, ...]
    order: int

    def __post_init__(self):
        if len(self.nodes) != self.order or len(self.weights) != self.order:
            raise ValueError("rule must hold exactly `order` nodes and weights")
        if any(b <= a for a, b in zip(self.nodes, self.nodes[1:])):
            raise ValueError("nodes must be strictly increasing")
        if any(w <= 0.0 for w in self.weights):
            raise ValueError("weights must be positive")
        if abs(math.fsum(self.weights) - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1 (zeroth moment)")


def gauss_laguerre(order: int) -> QuadratureRule:
    """Gauss-Laguerre rule built from the classical three-term recurrence.

    The zeros of successive degrees interlace, so the zeros of degree k-1
    (plus 0 below and a crude upper bound above; every zero of degree k sits
    under 4k+3) bracket exactly one zero of degree k each.  Weights use the
    standard formula x / ((N+1) * L_{N+1}(x))**2.
    """
    if not (isinstance(order, int) and 1 <= order <= 64):
        raise ValueError("order must be an integer in [1, 64]")
    roots = [1.0]
    for k in range(2, order + 1):
        brackets = [0.0] + roots + [4.0 * k + 3.0]
        roots = [
            _refine_root(k, brackets[i], brackets[i + 1]) for i in range(k)
        ]
    weights = []
    for x in roots:
        value = _laguerre_pair(order + 1, x)[0]
        weights.append(x / ((order + 1) * value) ** 2)
    return QuadratureRule(tuple(roots), tuple(weights), order)


def quad_dalpha(
    f: Callable[[float], float], alpha, rule: QuadratureRule
) -> float:
    """Estimate integral_0^inf f(x) x**(alpha-1) dx by quadrature in u-space.

    Substituting x = (alpha*u)**(1/alpha) leaves integral_0^inf f(x(u)) du;
    the implicit exp(-u) weight of the rule is compensated by exp(+u), folded
    into the weight on a log scale to keep large nodes in range.  The caller
    must supply f that decays like exp(-c*u) with c > 0 in u-space.
    """
    a = as_alpha(alpha)
    total = 0.0
    for u, w in zip(rule.nodes, rule.weights):
        x = (a * u) ** (1.0 / a)
        total += math.exp(u + math.log(w)) * f(x)
    return total


def quad_transform(
    g: Callable[[float], float], s: float, rule: QuadratureRule
) -> float:
    """Numeric forward transform integral_0^inf exp(-s*u) g(u) du.

    The substitution v = s*u maps onto the rule's native weight, giving
    (1/s) * sum_i w_i g(u_i / s).
    """
    if s <= 0.0:
        raise ValueError("s must be positive")
    return math.fsum(w * g(u / s) for u, w in zip(rule.nodes, rule.weights)) / s
