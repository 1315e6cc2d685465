from fractions import Fraction

import pytest

from catalog.entries import build_ball, build_intriguing, build_simplex
from moments.functional import MomentFunctional


@pytest.fixture()
def intriguing():
    return build_intriguing()


@pytest.fixture()
def ball():
    return build_ball(Fraction(1))


@pytest.fixture()
def simplex():
    return build_simplex(Fraction(0), Fraction(0), Fraction(0))


@pytest.fixture()
def degenerate_functional():
    """`μ_10 = μ_20 = 1` makes the first moment matrix singular."""
    return MomentFunctional(
        {(0, 0): 1, (1, 0): 1, (0, 1): 0, (2, 0): 1, (1, 1): 0, (0, 2): 1}, cap=2
    )
