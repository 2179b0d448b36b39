#!/usr/bin/env python3
"""A tour of the exact core: the reduced variable and its derivative.

Every object lives in u = x**alpha / alpha.  Coefficients are exact
rationals, so identities either hold exactly or not at all; alpha only
shows up when we evaluate or render.
"""

from fractions import Fraction as F

from claguerre import (
    ExpPoly,
    ReducedPoly,
    d_alpha,
    d_alpha_n,
    d_alpha_numeric,
    x_view_str,
)

u = ReducedPoly((0, 1))

print("== polynomials in the reduced variable ==")
p = 1 - u
q = ReducedPoly((1, -2, F(1, 2)))
print(f"p       = {p}")
print(f"q       = {q}")
print(f"p * q   = {p * q}")
print(f"p ** 2  = {p ** 2}")

print()
print("== the conformable derivative acts as d/du ==")
print(f"d(u^3)        = {d_alpha(ReducedPoly.monomial(3))}")
w = ExpPoly.exp(-1)  # exp(-u), the weight of the whole theory
print(f"d(exp(-u))    = {d_alpha(w)}")
print(f"d^3(exp(-u))  = {d_alpha_n(w, 3)}")
seed = ExpPoly.exp(-1, u)  # u * exp(-u)
print(f"d(u exp(-u))  = {d_alpha(seed)}")

print()
print("== product rule, checked exactly ==")
a = ExpPoly.exp(-1, q)
b = ExpPoly.from_poly(p)
lhs = (a * b).d_alpha()
rhs = a.d_alpha() * b + a * b.d_alpha()
print(f"d(a*b) == d(a)*b + a*d(b): {lhs == rhs}")

print()
print("== numeric derivative from the limit definition ==")
alpha, x = 0.5, 2.0
exact = q.deriv().eval(x, alpha)
numeric = d_alpha_numeric(lambda t: q.eval(t, alpha), x, alpha, h=1e-4)
print(f"exact path    : {exact:.12f}")
print(f"central diff  : {numeric:.12f}")
print(f"|difference|  : {abs(exact - numeric):.2e}")

print()
print("== rendering in x and alpha ==")
print(f"q in x-view: {x_view_str(q)}")
