from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diffcalc.carrier import (
    CarrierTerm,
    WeightCarrier,
    carrier_D,
    carrier_derivative,
    carrier_div_n,
    carrier_matrix,
)
from diffcalc.operators import apply_D
from polycore.choices import AxisChoices
from polycore.exceptions import NotDivisible, ShapeError
from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly, X, Y, exact_divide
from tests.polycore.tests.strategies import polynomials


class TestWeightCarrier:
    def test_constant_factor_rejected(self):
        with pytest.raises(ValueError):
            WeightCarrier(factors=((BiPoly.constant(2), 1),))

    def test_repeated_factor_rejected(self):
        with pytest.raises(ValueError):
            WeightCarrier(factors=((X, 1), (X, 2)))

    def test_polynomial_weight(self, polynomial_weight, disk_weight):
        assert polynomial_weight.is_polynomial()
        assert polynomial_weight.as_polynomial() == X**2 * (1 - X - Y) ** 3
        assert not disk_weight.is_polynomial()

    def test_perturbed_copy(self, disk_weight):
        shifted = disk_weight.perturbed(0, 1)
        assert shifted.exponents() == [Fraction(3, 2)]
        assert disk_weight.exponents() == [Fraction(1, 2)]


class TestCarrierDerivative:
    def test_disk_weight(self, disk_weight):
        derivative = carrier_derivative(disk_weight.unit(), disk_weight, AxisChoices.X)
        assert derivative == CarrierTerm(-X, (1,))

    def test_exponential_weight(self, exponential_weight):
        term = exponential_weight.term(X + Y)
        derivative = carrier_derivative(term, exponential_weight, AxisChoices.X)
        assert derivative.numerator == 1 - (X + Y) * Y
        assert derivative.exponents == ()

    def test_denominator_stops_at_integer_exponents(self, polynomial_weight):
        term = polynomial_weight.unit()
        for _ in range(4):
            term = carrier_derivative(term, polynomial_weight, AxisChoices.X)
        assert term.exponents[0] <= 2
        assert term.exponents[1] <= 3

    @settings(max_examples=25, deadline=None)
    @given(polynomials, st.integers(0, 2), st.integers(0, 2))
    def test_agrees_with_polynomial_calculus(self, p, i, extra):
        weight = WeightCarrier(factors=((X, 2), (1 - X - Y, 3)))
        n = i + extra
        result = carrier_D(i, n, weight.term(p), weight)
        omega = weight.as_polynomial()
        rebuilt = exact_divide(result.numerator * omega, weight.denominator(result.exponents))
        assert rebuilt == apply_D(i, n, p * omega)


class TestCarrierDivergence:
    def test_rodrigues_numerator_for_the_disk(self, disk_weight):
        # div(Φ ω) / ω for Φ = I - (x, y)^t (x, y) and ω = (1 - r^2)^(1/2) is -4 (x, y)
        phi = PolyMatrix([[1 - X * X, -X * Y], [-X * Y, 1 - Y * Y]])
        blocks = [carrier_matrix(phi.row_block(i, 1), disk_weight) for i in range(2)]
        result = carrier_div_n(blocks, disk_weight, 1)
        entries = [term.to_polynomial(disk_weight) for term in result[0]]
        assert entries == [-4 * X, -4 * Y]

    def test_block_count(self, disk_weight):
        block = carrier_matrix(PolyMatrix([[X]]), disk_weight)
        with pytest.raises(ShapeError):
            carrier_div_n([block], disk_weight, 2)

    def test_inexact_division(self, disk_weight):
        with pytest.raises(NotDivisible):
            CarrierTerm(X, (1,)).to_polynomial(disk_weight)
