from fractions import Fraction

import pytest
from django.core.exceptions import ValidationError
from hypothesis import given, settings

from catalog.entries import build_ball, build_intriguing
from diffcalc.carrier import WeightCarrier
from pearson.choices import ConstructionFormChoices
from pearson.families import FamilyForm, FamilySpec
from pearson.operators import apply_L, divergence_form, drift_independence
from pearson.serializers import family_to_document, parse_family_document
from polycore.exceptions import ConstructionUnavailable
from polycore.matrix import PolyMatrix
from polycore.polynomial import X, Y
from tests.polycore.tests.strategies import polynomials


class TestFamilyForm:
    def test_phi_must_be_symmetric(self):
        with pytest.raises(ValidationError) as err:
            FamilyForm(phi=[[X, 1], [0, Y]], psi=[X, Y])
        assert err.value.code == "phi_not_symmetric"

    @pytest.mark.parametrize(
        "phi, psi",
        [([[X**3, 0], [0, 1]], [X, Y]), ([[1, 0], [0, 1]], [X * Y, Y])],
    )
    def test_degree_bounds(self, phi, psi):
        with pytest.raises(ValidationError) as err:
            FamilyForm(phi=phi, psi=psi)
        assert err.value.code == "degree_bound_exceeded"

    def test_psi_needs_two_entries(self):
        with pytest.raises(ValidationError) as err:
            FamilyForm(phi=[[1, 0], [0, 1]], psi=[X, Y, 1])
        assert err.value.code == "invalid_matrix"

    def test_tilde_psi(self, intriguing, ball):
        assert intriguing.original.tilde_psi == PolyMatrix.column([-X, -Y])
        # Ψ - (div Φ)^t with div Φ = 3 (x, y)
        assert ball.original.tilde_psi == PolyMatrix.column([X, Y])

    def test_forms(self, intriguing, ball):
        assert intriguing.available_forms() == [ConstructionFormChoices.ORIGINAL]
        assert ball.form(ConstructionFormChoices.DIAGONAL).is_diagonal
        with pytest.raises(ConstructionUnavailable) as err:
            intriguing.form(ConstructionFormChoices.DIAGONAL)
        assert err.value.code == "construction_unavailable"

    def test_empty_name(self):
        with pytest.raises(ValidationError) as err:
            FamilySpec(name=" ", phi=[[1, 0], [0, 1]], psi=[-2 * X, -2 * Y])
        assert err.value.code == "invalid_family_document"


class TestOperator:
    def test_L_on_monomials(self, intriguing):
        # L = 3y d_xx + 2 d_xy - x d_x - y d_y
        assert apply_L(intriguing, X * Y) == 2 - 2 * X * Y
        assert apply_L(intriguing, X**2) == 6 * Y - 2 * X**2

    @settings(max_examples=30, deadline=None)
    @given(polynomials)
    def test_divergence_form_matches(self, p):
        for family in (build_intriguing(), build_ball(Fraction(1, 3))):
            assert divergence_form(family, p) == apply_L(family, p)

    def test_L_preserves_degree(self, ball):
        assert apply_L(ball, X**3 * Y).total_degree == 4

    def test_drift_independence(self, intriguing):
        assert drift_independence(intriguing)
        degenerate = FamilyForm(phi=[[1, 0], [0, 1]], psi=[X + Y, 2 * X + 2 * Y])
        assert not drift_independence(degenerate)


class TestFamilyDocuments:
    def test_parse(self, intriguing_document, intriguing):
        family = parse_family_document(intriguing_document)
        assert family.name == "user-intriguing"
        assert family.phi == intriguing.phi
        assert family.psi == intriguing.psi
        assert family.weight == WeightCarrier(s=Y**3 - X * Y)

    def test_document_of_a_catalog_family(self, ball):
        document = family_to_document(ball)
        assert document["params"] == {"mu": "1/1"}
        assert document["diagonal_reduction"]["weight"]["factors"] == [
            [{"terms": [[2, 0, "-1/1"], [0, 2, "-1/1"], [0, 0, "1/1"]]}, "1/2"]
        ]
        assert parse_family_document(document).diagonal_reduction == ball.diagonal_reduction

    def test_decimal_rejected(self, intriguing_document):
        intriguing_document["psi"][0] = 0.5
        with pytest.raises(ValidationError) as err:
            parse_family_document(intriguing_document)
        assert err.value.code == "decimal_rejected"

    def test_non_symmetric_phi(self, intriguing_document):
        intriguing_document["phi"][1][0] = 2
        with pytest.raises(ValidationError) as err:
            parse_family_document(intriguing_document)
        assert err.value.code == "phi_not_symmetric"

    @pytest.mark.parametrize("document", [[], {"name": "missing-phi"}])
    def test_malformed_documents(self, document):
        with pytest.raises(ValidationError) as err:
            parse_family_document(document)
        assert err.value.code == "invalid_family_document"
