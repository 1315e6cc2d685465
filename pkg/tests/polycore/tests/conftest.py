from fractions import Fraction

import pytest

from polycore.polynomial import X, Y


@pytest.fixture()
def sample_polynomial():
    """`-3x^2 y + 18y^2 + 6x`."""
    return -3 * X**2 * Y + 18 * Y**2 + 6 * X


@pytest.fixture()
def example_matrix():
    return [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
