from fractions import Fraction

import pytest

from catalog.entries import build_ball, build_intriguing, build_simplex


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
def intriguing_document():
    return {
        "name": "user-intriguing",
        "description": "Entered by hand.",
        "phi": [[{"terms": [[0, 1, "3"]]}, 1], [1, 0]],
        "psi": [{"terms": [[1, 0, "-1"]]}, {"terms": [[0, 1, "-1"]]}],
        "weight": {"s": {"terms": [[0, 3, "1"], [1, 1, "-1"]]}, "factors": []},
    }
