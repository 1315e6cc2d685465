from fractions import Fraction

import pytest

from catalog.entries import closed_form_for
from diffcalc.carrier import WeightCarrier
from moments.closed_form import ball_moments
from polycore.polynomial import X, Y


@pytest.fixture()
def disk_weight():
    """`(1 - x^2 - y^2)^(1/2)`."""
    return WeightCarrier(factors=((1 - X * X - Y * Y, Fraction(1, 2)),))


@pytest.fixture()
def exponential_weight():
    """The Krall-Sheffer factor `exp(y^3 - xy)`."""
    return WeightCarrier(s=Y**3 - X * Y)


@pytest.fixture()
def polynomial_weight():
    """`x^2 (1 - x - y)^3`, a weight that is itself a polynomial."""
    return WeightCarrier(factors=((X, 2), (1 - X - Y, 3)))


@pytest.fixture()
def disk_functional():
    return ball_moments(Fraction(1, 2), 6)


@pytest.fixture()
def gaussian_functional():
    """Normalized moments of `exp(-x^2 - y^2)`."""
    return closed_form_for("tensor-hermite-hermite", {}, 8)
