from fractions import Fraction

import pytest

from catalog.entries import build_ball, build_diagonal_disk, build_intriguing, build_simplex
from moments.pearson_solver import moments_from_pearson


@pytest.fixture()
def intriguing():
    return build_intriguing()


@pytest.fixture()
def intriguing_moments(intriguing):
    return moments_from_pearson(intriguing, 6)


@pytest.fixture()
def ball():
    return build_ball(Fraction(1))


@pytest.fixture()
def simplex():
    return build_simplex(Fraction(0), Fraction(0), Fraction(0))


@pytest.fixture()
def disk():
    return build_diagonal_disk(Fraction(1, 2))
