from fractions import Fraction

import pytest

from catalog.entries import closed_form_for, load
from moments.choices import MomentProvenanceChoices
from moments.pearson_solver import adjoint_residuals, moments_from_pearson, pearson_relations
from pearson.families import FamilyForm
from polycore.exceptions import Underdetermined
from polycore.polynomial import X, Y
from tests.catalog.tests.cases import BALL_PARAMETERS, CATALOG_CASES, SIMPLEX_GRID


class TestPearsonMoments:
    def test_intriguing_moments(self, intriguing):
        functional = moments_from_pearson(intriguing, 3)
        assert functional.moment(0, 0) == 1
        assert functional.moment(1, 0) == functional.moment(0, 1) == 0
        assert functional.moment(1, 1) == 1
        assert functional.moment(2, 0) == functional.moment(0, 2) == 0
        assert functional.moment(3, 0) == 6
        assert functional.provenance == MomentProvenanceChoices.PEARSON_RECURRENCE

    def test_relations_of_a_monomial(self, intriguing):
        first, second = pearson_relations(intriguing, (1, 0))
        assert first == 3 * Y - X * X
        assert second == 1 - X * Y

    def test_ball_second_moment(self, ball):
        assert moments_from_pearson(ball, 2).moment(2, 0) == Fraction(1, 5)

    @pytest.mark.parametrize(
        "name, params",
        [("ball", params) for params in BALL_PARAMETERS]
        + [("simplex", params) for params in SIMPLEX_GRID]
        + [
            ("ball", {"mu": "1"}),
            ("ball", {"mu": "-1/4"}),
            ("simplex", {"alpha": "1/2", "beta": "1", "gamma": "2"}),
            ("tensor-hermite-hermite", {}),
            ("tensor-laguerre-jacobi", {"alpha": "1", "beta": "1/2", "gamma": "0"}),
            ("tensor-hermite-laguerre", {"alpha": "2"}),
            ("tensor-bessel-hermite", {"alpha": "1"}),
        ],
    )
    def test_matches_closed_form(self, name, params):
        family = load(name, params)
        assert moments_from_pearson(family, 12) == closed_form_for(name, params, 12)

    @pytest.mark.parametrize("name, params", CATALOG_CASES)
    def test_annihilated_by_the_adjoint(self, name, params):
        family = load(name, params)
        assert adjoint_residuals(moments_from_pearson(family, 12), family) == []

    def test_underdetermined(self):
        family = FamilyForm(phi=[[0, 0], [0, 0]], psi=[0, -Y])
        with pytest.raises(Underdetermined) as err:
            moments_from_pearson(family, 2)
        assert err.value.code == "underdetermined"
        assert err.value.details["degree"] == 1

    def test_negative_cap(self, intriguing):
        with pytest.raises(ValueError):
            moments_from_pearson(intriguing, -1)
