import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from claguerre.alpha_calc import (
    AlgebraError,
    AlphaValue,
    ExpPoly,
    ReducedPoly,
    XViewTerm,
    as_alpha,
    d_alpha,
    d_alpha_n,
    d_alpha_numeric,
    from_x_view,
    x_view,
    x_view_str,
)

U = ReducedPoly((0, 1))


def conv(a, b):
    """Independent coefficient convolution, the oracle for products."""
    out = [F(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += F(x) * F(y)
    return out


# -- strategies ----------------------------------------------------------------

fractions = st.builds(F, st.integers(-4, 4), st.integers(1, 4))
polys = st.builds(ReducedPoly, st.lists(fractions, max_size=6))
rates = st.sampled_from([F(-2), F(-1), F(0), F(1)])
exppolys = st.builds(
    ExpPoly, st.lists(st.tuples(rates, polys), min_size=1, max_size=3)
)


class TestReducedPoly:
    def test_canonical_form_strips_trailing_zeros(self):
        p = ReducedPoly((1, 2, 0, 0))
        assert p.coeffs == (F(1), F(2))
        assert p.degree == 1
        assert ReducedPoly((0, 0)).is_zero
        assert ReducedPoly().degree == -1

    def test_floats_are_rejected(self):
        with pytest.raises(TypeError):
            ReducedPoly((0.5,))

    def test_degree_bounds(self):
        p, q = ReducedPoly((1, 2, 3)), ReducedPoly((0, 1))
        assert (p + q).degree <= max(p.degree, q.degree)
        assert (p * q).degree == p.degree + q.degree

    def test_scalar_arithmetic(self):
        assert 1 - U == ReducedPoly((1, -1))
        assert (1 - U) * F(1, 2) == ReducedPoly((F(1, 2), F(-1, 2)))
        assert ReducedPoly((2, 4)) / 2 == ReducedPoly((1, 2))

    def test_power(self):
        assert (1 - U) ** 2 == ReducedPoly((1, -2, 1))

    def test_exact_call(self):
        p = ReducedPoly((1, -2, F(1, 2)))
        assert p(F(2)) == F(-1)
        assert isinstance(p(F(2)), F)

    def test_divide_by_u(self):
        assert ReducedPoly((0, 0, 3)).divide_by_u(2) == ReducedPoly((3,))
        with pytest.raises(AlgebraError):
            ReducedPoly((1, 1)).divide_by_u(1)

    def test_taylor_shift(self):
        # (u+1)^2 = 1 + 2u + u^2
        assert ReducedPoly((0, 0, 1)).taylor_shift(1) == ReducedPoly((1, 2, 1))

    def test_str(self):
        assert str(ReducedPoly((1, -2, F(1, 2)))) == "1 - 2*u + 1/2*u^2"
        assert str(ReducedPoly()) == "0"


class TestExpPolyArithmetic:
    def test_additive_inverse(self):
        one = ExpPoly.from_poly(ReducedPoly.one())
        assert (one + (-one)).is_zero

    def test_like_terms_merge(self):
        t = ExpPoly.exp(-1, U)
        assert t + t == ExpPoly.exp(-1, 2 * U)

    def test_plain_sum(self):
        assert ExpPoly.from_poly(1 - U) + ExpPoly.from_poly(U) == 1

    def test_rate_cancellation(self):
        assert ExpPoly.exp(-1) * ExpPoly.exp(1) == 1

    def test_binomial_square(self):
        p = ExpPoly.from_poly(1 - U)
        assert p * p == ExpPoly.from_poly(ReducedPoly((1, -2, 1)))

    def test_product_against_convolution_oracle(self):
        # L1 * L2 with the expected coefficients convolved independently
        l1, l2 = [F(1), F(-1)], [F(1), F(-2), F(1, 2)]
        expected = ReducedPoly(conv(l1, l2))
        assert expected == ReducedPoly((1, -3, F(5, 2), F(-1, 2)))
        got = ExpPoly.from_poly(ReducedPoly(l1)) * ExpPoly.from_poly(ReducedPoly(l2))
        assert got == ExpPoly.from_poly(expected)

    def test_zero_polynomial_terms_dropped(self):
        assert ExpPoly(((F(-1), ReducedPoly()),)).is_zero

    def test_rates_sorted_and_distinct(self):
        e = ExpPoly(((F(1), 1), (F(-1), 1), (F(1), 2)))
        assert e.rates == (F(-1), F(1))


class TestConformableDerivative:
    def test_monomial_power_rule(self):
        assert d_alpha(ReducedPoly.monomial(3)) == 3 * ReducedPoly.monomial(2)

    def test_exponential_eigenfunction(self):
        w = ExpPoly.exp(-1)
        assert d_alpha(w) == -w

    def test_constant(self):
        assert d_alpha(ExpPoly.from_poly(5 * ReducedPoly.one())).is_zero

    def test_iterated(self):
        assert d_alpha_n(ReducedPoly.monomial(2), 2) == ReducedPoly((2,))
        assert d_alpha_n(ExpPoly.exp(-1), 3) == -ExpPoly.exp(-1)

    def test_single_product_rule_step(self):
        # d/du (u e^-u) = (1 - u) e^-u, by one product-rule step
        got = d_alpha(ExpPoly.exp(-1, U))
        assert got == ExpPoly.exp(-1, 1 - U)

    def test_weighted_monomial_second_derivative(self):
        # two product-rule steps by hand: d^2/du^2 (u^2 e^-u) = (2 - 4u + u^2) e^-u
        got = d_alpha_n(ExpPoly.exp(-1, ReducedPoly.monomial(2)), 2)
        assert got == ExpPoly.exp(-1, ReducedPoly((2, -4, 1)))

    def test_rejects_negative_order(self):
        with pytest.raises(ValueError):
            d_alpha_n(U, -1)

    @settings(max_examples=60, deadline=None)
    @given(exppolys, exppolys)
    def test_product_rule(self, p, q):
        assert (p * q).d_alpha() == p.d_alpha() * q + p * q.d_alpha()

    @settings(max_examples=25, deadline=None)
    @given(exppolys, exppolys, st.integers(0, 5))
    def test_binomial_expansion_of_iterates(self, f, g, n):
        lhs = d_alpha_n(f * g, n)
        rhs = ExpPoly()
        for k in range(n + 1):
            rhs = rhs + math.comb(n, k) * (d_alpha_n(f, n - k) * d_alpha_n(g, k))
        assert lhs == rhs


class TestNumericDerivative:
    def test_constant_is_flat(self):
        assert d_alpha_numeric(lambda x: 5.0, 1.7, 0.5, h=1e-4) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_power_rule_value(self):
        # the derivative of x**alpha of order alpha is the constant alpha
        got = d_alpha_numeric(lambda x: x**0.5, 2.0, 0.5, h=1e-5)
        assert got == pytest.approx(0.5, abs=1e-8)

    def test_x_power_rendering(self):
        # d of x**(k*alpha) is k*alpha*x**((k-1)*alpha)
        k, a, x = 3, 0.5, 1.7
        got = d_alpha_numeric(lambda t: t ** (k * a), x, a, h=1e-5)
        assert got == pytest.approx(k * a * x ** ((k - 1) * a), rel=1e-8)

    def test_matches_exact_path(self):
        from claguerre.laguerre import laguerre_closed

        poly = laguerre_closed(2)
        f = lambda x: poly.eval(x, 0.5)
        want = poly.deriv().eval(1.0, 0.5)
        assert d_alpha_numeric(f, 1.0, 0.5, h=1e-4) == pytest.approx(want, abs=1e-6)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            d_alpha_numeric(lambda x: x, 0.0, 0.5)
        with pytest.raises(ValueError):
            d_alpha_numeric(lambda x: x, 1.0, 0.5, h=0.0)

    def test_error_drops_quadratically(self):
        from claguerre.laguerre import laguerre_closed

        poly = laguerre_closed(5)
        f = lambda x: poly.eval(x, 0.25)
        want = poly.deriv().eval(0.5, 0.25)
        e1 = abs(d_alpha_numeric(f, 0.5, 0.25, h=0.05) - want)
        e2 = abs(d_alpha_numeric(f, 0.5, 0.25, h=0.025) - want)
        assert e1 / e2 >= 3.5


class TestEval:
    def test_value_at_zero_is_constant_term(self):
        from claguerre.laguerre import laguerre_closed

        for a in (0.25, 0.5, 1.0):
            assert laguerre_closed(1).eval(0.0, a) == pytest.approx(1.0)

    def test_classical_point(self):
        assert (1 - U).eval(1.0, 1.0) == pytest.approx(0.0)

    def test_reduced_substitution(self):
        # u = 1**0.5 / 0.5 = 2, so 1 - u = -1
        assert (1 - U).eval(1.0, 0.5) == pytest.approx(-1.0)

    def test_negative_x_rejected(self):
        with pytest.raises(ValueError):
            (1 - U).eval(-1.0, 0.5)

    def test_exppoly_value_at_zero(self):
        e = ExpPoly.exp(-2, ReducedPoly((3, 1))) + ExpPoly.from_poly(1 - U)
        assert e.value_at_zero() == F(4)
        assert e.eval(0.0, 0.5) == pytest.approx(4.0)


class TestAlphaValue:
    @pytest.mark.parametrize("bad", [0.0, -0.5, 1.2, 7])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            AlphaValue(bad)

    def test_accepts_boundary(self):
        assert AlphaValue(1.0).value == 1.0
        assert as_alpha(AlphaValue(0.5)) == 0.5
        assert as_alpha(F(1, 4)) == 0.25


class TestXView:
    def test_basic_terms(self):
        assert x_view(1 - U) == (
            XViewTerm(0, F(1), 0),
            XViewTerm(1, F(-1), -1),
        )

    def test_zero_is_empty(self):
        assert x_view(ReducedPoly()) == ()

    def test_skips_zero_coefficients(self):
        assert x_view(ReducedPoly.monomial(2, F(1, 2))) == (
            XViewTerm(2, F(1, 2), -2),
        )

    def test_strings(self):
        assert x_view_str(1 - U) == "1 - 1 * a^(-1) * x^(1*a)"
        assert x_view_str(ReducedPoly.monomial(2, F(1, 2))) == "1/2 * a^(-2) * x^(2*a)"
        assert x_view_str(ReducedPoly()) == "0"

    @settings(max_examples=60, deadline=None)
    @given(polys)
    def test_round_trip(self, p):
        assert from_x_view(x_view(p)) == p


@settings(max_examples=60, deadline=None)
@given(polys)
def test_recanonicalization_is_identity(p):
    assert ReducedPoly(p.coeffs) == p


@settings(max_examples=60, deadline=None)
@given(exppolys)
def test_exppoly_recanonicalization_is_identity(e):
    assert ExpPoly(e.terms) == e
