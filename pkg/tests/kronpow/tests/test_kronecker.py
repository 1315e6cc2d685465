import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog.entries import load
from kronpow.choices import KronPathChoices, RecurrenceVariantChoices
from kronpow.kronecker import (
    kron_by_path,
    kron_entry,
    kron_explicit,
    kron_power,
    kron_recurrence,
    recurrence_multipliers,
    selector,
)
from kronpow.serializers import KronMatrixSerializer, KronRequestSerializer
from polycore.exceptions import DimensionError
from polycore.linalg import determinant
from polycore.matrix import PolyMatrix
from polycore.polynomial import X, Y
from tests.catalog.tests.cases import CATALOG_CASES
from tests.polycore.tests.strategies import rationals

rational_matrices = st.lists(
    st.lists(rationals, min_size=2, max_size=2), min_size=2, max_size=2
).map(PolyMatrix)
powers = st.integers(0, 8)


class TestKroneckerPower:
    @pytest.mark.parametrize("path", KronPathChoices.values)
    def test_worked_example(self, example_matrix, path):
        power = kron_by_path(example_matrix, 2, path)
        assert power.body == PolyMatrix([[1, 4, 4], [3, 10, 8], [9, 24, 16]])

    def test_power_zero_and_one(self, example_matrix):
        assert kron_power(example_matrix, 0).body == PolyMatrix.identity(1)
        assert kron_power(example_matrix, 1).body == example_matrix

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_paths_agree_on_polynomial_entries(self, polynomial_matrix, n):
        explicit = kron_explicit(polynomial_matrix, n)
        assert kron_recurrence(polynomial_matrix, n) == explicit
        assert kron_recurrence(polynomial_matrix, n, RecurrenceVariantChoices.SECOND) == explicit
        assert kron_power(polynomial_matrix, n) == explicit

    def test_second_power_entries(self):
        a00, a01, a10, a11 = X, Y, X * Y + 1, Y * Y - X
        power = kron_explicit(PolyMatrix([[a00, a01], [a10, a11]]), 2).body
        assert power == PolyMatrix(
            [
                [a00**2, 2 * a00 * a01, a01**2],
                [a00 * a10, a00 * a11 + a01 * a10, a01 * a11],
                [a10**2, 2 * a10 * a11, a11**2],
            ]
        )

    @pytest.mark.parametrize("name, params", CATALOG_CASES)
    def test_paths_agree_on_catalog_phi(self, name, params):
        family = load(name, params)
        for choice in family.available_forms():
            phi = family.form(choice).phi
            for n in range(9):
                explicit = kron_explicit(phi, n)
                assert kron_recurrence(phi, n, RecurrenceVariantChoices.FIRST) == explicit, n
                assert kron_recurrence(phi, n, RecurrenceVariantChoices.SECOND) == explicit, n

    def test_single_entry(self, polynomial_matrix):
        power = kron_explicit(polynomial_matrix, 3)
        assert kron_entry(polynomial_matrix, 3, 1, 2) == power.entry(1, 2)

    def test_entry_out_of_range(self, example_matrix):
        with pytest.raises(IndexError):
            kron_entry(example_matrix, 2, 3, 0)

    @pytest.mark.parametrize("matrix", [[[1, 2, 3], [4, 5, 6]], [[1]], [[1, 0], [0, 1], [1, 1]]])
    def test_only_two_by_two(self, matrix):
        with pytest.raises(DimensionError) as err:
            kron_power(matrix, 2)
        assert err.value.code == "dimension_mismatch"

    def test_negative_power(self, example_matrix):
        with pytest.raises(ValueError):
            kron_explicit(example_matrix, -1)

    @settings(max_examples=100, deadline=None)
    @given(rational_matrices, powers)
    def test_recurrences_match_explicit_formula(self, matrix, n):
        explicit = kron_explicit(matrix, n)
        assert kron_recurrence(matrix, n, RecurrenceVariantChoices.FIRST) == explicit
        assert kron_recurrence(matrix, n, RecurrenceVariantChoices.SECOND) == explicit

    @settings(max_examples=30, deadline=None)
    @given(rational_matrices, rational_matrices, powers)
    def test_power_of_a_product(self, a, b, n):
        assert kron_explicit(a @ b, n).body == kron_explicit(a, n).body @ kron_explicit(b, n).body

    @settings(max_examples=30, deadline=None)
    @given(rational_matrices, powers)
    def test_determinant(self, matrix, n):
        power = kron_explicit(matrix, n).body.to_rationals()
        base = determinant(matrix.to_rationals())
        assert determinant(power) == base ** (n * (n + 1) // 2)


class TestRecurrenceMatrices:
    def test_selectors(self):
        assert selector(1, 0) == PolyMatrix([[1, 0, 0], [0, 1, 0]])
        assert selector(1, 1) == PolyMatrix([[0, 1, 0], [0, 0, 1]])

    def test_selector_index(self):
        with pytest.raises(ValueError):
            selector(1, 2)

    @pytest.mark.parametrize("variant", RecurrenceVariantChoices.values)
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matrix_form(self, polynomial_matrix, variant, n):
        first, second = recurrence_multipliers(polynomial_matrix, n, variant)
        previous = kron_explicit(polynomial_matrix, n - 1).body
        rebuilt = first @ previous @ selector(n - 1, 0) + second @ previous @ selector(n - 1, 1)
        assert rebuilt == kron_explicit(polynomial_matrix, n).body


class TestKronSerializers:
    def test_request(self):
        serializer = KronRequestSerializer(data={"matrix": [[1, "1/2"], [0, 1]], "n": 2})
        assert serializer.is_valid(), serializer.errors
        assert serializer.validated_data["path"] == KronPathChoices.RECURRENCE_I

    def test_request_rejects_wrong_shape(self):
        serializer = KronRequestSerializer(data={"matrix": [[1, 2, 3]], "n": 2})
        assert not serializer.is_valid()
        assert "matrix" in serializer.errors

    def test_output_document(self, example_matrix):
        document = KronMatrixSerializer(kron_power(example_matrix, 1)).data
        assert document["n"] == 1
        assert document["matrix"][1][0] == {"terms": [[0, 0, "3/1"]]}
