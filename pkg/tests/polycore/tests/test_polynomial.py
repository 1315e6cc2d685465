from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polycore.choices import AxisChoices
from polycore.exceptions import NotDivisible
from polycore.polynomial import (
    DEGREE_OF_ZERO,
    BiPoly,
    X,
    Y,
    as_rational,
    basis_size,
    coefficient_vector,
    exact_divide,
    from_coefficient_vector,
    monomial_index,
    monomials_up_to,
    to_latex,
    to_text,
)
from tests.polycore.tests.strategies import nonzero_polynomials, polynomials


class TestBiPolyArithmetic:
    def test_difference_of_squares(self):
        assert (X - Y) * (X + Y) == X**2 - Y**2

    def test_cancelling_terms_are_dropped(self):
        assert (X + 1) - X == BiPoly.constant(1)
        assert BiPoly([((1, 0), 1), ((1, 0), -1)]).is_zero()

    def test_zero_polynomial_degree(self):
        zero = BiPoly.zero()
        assert zero.total_degree == DEGREE_OF_ZERO
        assert zero.total_degree < 0
        assert (zero * X).total_degree == DEGREE_OF_ZERO

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            BiPoly({(-1, 0): 1})

    def test_float_coefficient_rejected(self):
        with pytest.raises(TypeError):
            as_rational(0.5)

    def test_partial_derivatives(self):
        p = X**3 * Y**2
        assert p.partial(AxisChoices.X, 2) == 6 * X * Y**2
        assert p.partial(AxisChoices.Y) == 2 * X**3 * Y
        assert p.partial(AxisChoices.Y, 3).is_zero()

    def test_evaluate_is_exact(self):
        p = X**2 + Y.scale(Fraction(1, 3))
        assert p.evaluate(Fraction(1, 2), 3) == Fraction(5, 4)

    @settings(max_examples=40, deadline=None)
    @given(nonzero_polynomials, nonzero_polynomials)
    def test_degree_of_product_is_additive(self, p, q):
        assert (p * q).total_degree == p.total_degree + q.total_degree

    @settings(max_examples=40, deadline=None)
    @given(polynomials, polynomials, polynomials)
    def test_product_distributes_over_sum(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @settings(max_examples=40, deadline=None)
    @given(polynomials, polynomials, st.sampled_from([AxisChoices.X, AxisChoices.Y]))
    def test_leibniz_rule(self, p, q, axis):
        assert (p * q).partial(axis) == p.partial(axis) * q + p * q.partial(axis)


class TestExactDivision:
    def test_divides_exact_multiple(self):
        assert exact_divide(X**2 - Y**2, X - Y) == X + Y

    def test_constant_divisor_scales(self):
        assert exact_divide(2 * X + 4, 2) == X + 2

    def test_not_divisible(self):
        with pytest.raises(NotDivisible) as err:
            exact_divide(X**2 + 1, X)
        assert err.value.code == "not_divisible"

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(X, BiPoly.zero())

    @settings(max_examples=40, deadline=None)
    @given(polynomials, nonzero_polynomials)
    def test_quotient_of_a_product(self, p, d):
        assert exact_divide(p * d, d) == p


class TestMonomialBasis:
    def test_graded_order(self):
        assert monomials_up_to(2) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]

    @pytest.mark.parametrize("n", [0, 1, 4])
    def test_index_matches_basis(self, n):
        basis = monomials_up_to(n)
        assert len(basis) == basis_size(n)
        assert [monomial_index(h, k) for h, k in basis] == list(range(len(basis)))

    def test_coefficient_vector(self, sample_polynomial):
        vector = coefficient_vector(sample_polynomial, 3)
        assert from_coefficient_vector(vector, 3) == sample_polynomial
        assert vector[monomial_index(0, 2)] == 18

    def test_coefficient_vector_too_small(self, sample_polynomial):
        with pytest.raises(ValueError):
            coefficient_vector(sample_polynomial, 2)


class TestRendering:
    def test_text(self, sample_polynomial):
        assert to_text(sample_polynomial) == "-3*x^2*y + 18*y^2 + 6*x"

    def test_text_of_fractions_and_zero(self):
        assert to_text(X.scale(Fraction(1, 2)) - 1) == "1/2*x - 1"
        assert to_text(BiPoly.zero()) == "0"

    def test_latex(self):
        assert to_latex(-(X**3) + 18 * X * Y - 12) == "-x^{3} + 18 x y - 12"
        assert to_latex(Y.scale(Fraction(-1, 3))) == "-\\frac{1}{3} y"
