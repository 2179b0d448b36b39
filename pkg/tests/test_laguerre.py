import math
from fractions import Fraction as F

import pytest

from claguerre.alpha_calc import ReducedPoly
from claguerre.laguerre import (
    GeneratingExpansion,
    LaguerreIndex,
    assoc_closed,
    assoc_from_derivative,
    assoc_rodrigues,
    generating_series,
    laguerre_closed,
    laguerre_rodrigues,
    ode_residual,
    values_at_zero,
)
from claguerre.laplace import solve_laguerre_ode
from claguerre.verify import classical_laguerre

U = ReducedPoly((0, 1))


class TestClosedForm:
    def test_degree_zero(self):
        assert laguerre_closed(0) == ReducedPoly.one()

    def test_degree_one(self):
        assert laguerre_closed(1) == 1 - U

    def test_degree_four(self):
        assert laguerre_closed(4) == ReducedPoly((1, -4, 3, F(-2, 3), F(1, 24)))

    def test_coefficient_formula(self):
        # spot-check k = 3 of degree 7 against the factorial expression
        got = laguerre_closed(7).coeff(3)
        assert got == F(-math.factorial(7), math.factorial(4) * math.factorial(3) ** 2)

    def test_rejects_bad_degree(self):
        with pytest.raises(ValueError):
            laguerre_closed(-1)


class TestRodrigues:
    def test_degree_zero(self):
        assert laguerre_rodrigues(0) == ReducedPoly.one()

    def test_degree_one_by_hand(self):
        # e^u * d/du(u e^-u) = 1 - u
        assert laguerre_rodrigues(1) == 1 - U

    def test_matches_closed_form(self):
        for n in range(13):
            assert laguerre_rodrigues(n) == laguerre_closed(n)


class TestAssociated:
    def test_closed_examples(self):
        assert assoc_closed(1, 1) == ReducedPoly((2, -1))
        assert assoc_closed(2, 2) == ReducedPoly((6, -4, F(1, 2)))

    def test_m_zero_reduces_to_plain(self):
        for n in range(6):
            assert assoc_closed(n, 0) == laguerre_closed(n)
            assert assoc_from_derivative(n, 0) == laguerre_closed(n)

    def test_derivative_route_by_hand(self):
        # -d/du L3 = -(-3 + 3u - u^2/2) = 3 - 3u + u^2/2
        assert assoc_from_derivative(2, 1) == ReducedPoly((3, -3, F(1, 2)))

    def test_derivative_route_higher_order(self):
        assert assoc_from_derivative(3, 3) == ReducedPoly((20, -15, 3, F(-1, 6)))

    def test_rodrigues_route_trivial_degree(self):
        for m in range(5):
            assert assoc_rodrigues(0, m) == ReducedPoly.one()

    def test_rodrigues_route_examples(self):
        assert assoc_rodrigues(3, 1) == ReducedPoly((4, -6, 2, F(-1, 6)))
        assert assoc_rodrigues(3, 2) == ReducedPoly((10, -10, F(5, 2), F(-1, 6)))

    def test_three_routes_agree(self):
        for n in range(9):
            for m in range(5):
                closed = assoc_closed(n, m)
                assert assoc_from_derivative(n, m) == closed
                assert assoc_rodrigues(n, m) == closed

    def test_coefficients_beyond_machine_words(self):
        # factorial ratios near n = 15 overflow 64-bit ints; the exact core
        # must not care
        closed = assoc_closed(15, 4)
        assert assoc_from_derivative(15, 4) == closed
        assert assoc_rodrigues(15, 4) == closed
        assert ode_residual(closed, 15, 4).is_zero
        assert closed.coeff(0) == F(
            math.factorial(19), math.factorial(15) * math.factorial(4)
        )


class TestOdeResidual:
    def test_closed_forms_solve(self):
        for n in range(13):
            assert ode_residual(laguerre_closed(n), n).is_zero

    def test_constant_solves_degree_zero(self):
        assert ode_residual(ReducedPoly.one(), 0).is_zero

    def test_bare_u_is_not_a_solution(self):
        # u*0 + (1-u)*1 + 1*u = 1
        assert ode_residual(U, 1) == ReducedPoly.one()

    def test_associated_residuals(self):
        for n in range(11):
            for m in range(5):
                assert ode_residual(assoc_closed(n, m), n, m).is_zero


class TestGeneratingSeries:
    def test_constant_coefficient(self):
        assert generating_series(0, 2)[0] == ReducedPoly.one()

    def test_plain_t_squared(self):
        assert generating_series(0, 3)[2] == ReducedPoly((1, -2, F(1, 2)))

    def test_associated_t_one(self):
        # (1 + 2t + ...)(1 - ut + ...) collects to 2 - u at order t
        assert generating_series(1, 2)[1] == ReducedPoly((2, -1))
        assert generating_series(1, 2)[1] == assoc_closed(1, 1)

    def test_coefficients_match_closed_forms(self):
        for m in range(4):
            expansion = generating_series(m, 10)
            for n in range(11):
                assert expansion[n] == assoc_closed(n, m)

    def test_partial_sum_against_closed_form(self):
        t = 0.3
        for alpha in (0.5, 1.0):
            for x in (0.5, 1.0):
                u = x**alpha / alpha
                total = math.fsum(
                    laguerre_closed(n).eval(x, alpha) * t**n for n in range(26)
                )
                closed = math.exp(-u * t / (1 - t)) / (1 - t)
                assert total == pytest.approx(closed, abs=1e-8)

    def test_order_validation(self):
        with pytest.raises(ValueError):
            generating_series(0, 0)

    def test_expansion_invariants(self):
        with pytest.raises(ValueError):
            GeneratingExpansion(1, (ReducedPoly.one(),))
        with pytest.raises(ValueError):
            GeneratingExpansion(1, (U, ReducedPoly.one()))


class TestValuesAtZero:
    def test_degree_zero(self):
        assert values_at_zero(0) == (F(1), F(0), F(0))

    def test_degree_one(self):
        assert values_at_zero(1) == (F(1), F(-1), F(0))

    def test_degree_four(self):
        assert values_at_zero(4) == (F(1), F(-4), F(6))

    def test_formula(self):
        for n in range(13):
            assert values_at_zero(n) == (F(1), F(-n), F(n * (n - 1), 2))


class TestCrossConstruction:
    def test_triple_equality(self):
        for n in range(13):
            closed = laguerre_closed(n)
            assert laguerre_rodrigues(n) == closed
            assert solve_laguerre_ode(n) == closed

    def test_classical_recurrence_oracle_at_alpha_one(self):
        for n in range(13):
            poly = laguerre_closed(n)
            for x in (0.1, 0.5, 1.0, 2.0, 5.0):
                assert abs(poly.eval(x, 1.0) - classical_laguerre(n, 0, x)) <= 1e-10

    def test_associated_classical_oracle(self):
        for n in range(7):
            for m in range(4):
                poly = assoc_closed(n, m)
                for x in (0.5, 2.0):
                    assert abs(poly.eval(x, 1.0) - classical_laguerre(n, m, x)) <= 1e-10


class TestIndexValidation:
    def test_laguerre_index(self):
        assert LaguerreIndex(3).m == 0
        with pytest.raises(ValueError):
            LaguerreIndex(-1)
        with pytest.raises(ValueError):
            LaguerreIndex(2, -3)

    def test_operations_validate(self):
        with pytest.raises(ValueError):
            assoc_closed(2, -1)
        with pytest.raises(ValueError):
            assoc_rodrigues(-2, 1)
