#!/usr/bin/env python3
"""Orthogonality against the conformable measure, exactly and numerically.

In the reduced variable the measure x**(alpha-1) dx becomes du, so the
weighted product integrals are rational numbers; the Gauss-Laguerre rule
built by the package reproduces them for every order alpha at once.
"""

import math

from claguerre import (
    ExpPoly,
    ReducedPoly,
    gauss_laguerre,
    laguerre_closed,
    moment_exact,
    orthonormality,
    quad_dalpha,
)

print("== exact weighted product matrix (6 x 6 block) ==")
for i in range(6):
    print("  ".join(str(orthonormality(i, j)) for j in range(6)))

print()
print("== same diagonal entry by quadrature, for several alphas ==")
rule = gauss_laguerre(20)
poly = laguerre_closed(3)
for alpha in (0.25, 0.5, 0.75, 1.0):
    f = lambda x: math.exp(-(x**alpha) / alpha) * poly.eval(x, alpha) ** 2
    value = quad_dalpha(f, alpha, rule)
    print(f"alpha = {alpha:<5} integral = {value:.12f}")

print()
print("== exact moments drive the whole check ==")
for k in range(6):
    moment = moment_exact(ExpPoly.exp(-1, ReducedPoly.monomial(k)))
    print(f"integral of u^{k} exp(-u) du = {moment}")
