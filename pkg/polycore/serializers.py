from django.core.exceptions import ValidationError
from rest_framework import serializers

from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly, format_rational
from polycore.validators import RationalValidator, TermValidator


class RationalField(serializers.Field):
    """
    Exact rational field: serialized as the string "num/den", never as a float.

    Usage:
        ```
        class MomentRowSerializer(serializers.Serializer):
            value = RationalField()
        ```
    """

    def to_representation(self, value):
        return format_rational(value)

    def to_internal_value(self, data):
        return RationalValidator.parse(data)


def poly_to_document(poly):
    """`{"terms": [[h, k, "num/den"], ...]}` in descending graded-lex order."""
    return {"terms": [[h, k, format_rational(value)] for (h, k), value in poly.items()]}


def poly_from_document(data):
    """
    Parses a polynomial document. Bare rationals are accepted as constant polynomials.

    Raises:
    - `ValidationError`: `invalid_term` or a coefficient error.
    """
    if isinstance(data, dict):
        terms = data.get("terms")
        if not isinstance(terms, list):
            raise ValidationError(
                "A polynomial document needs a 'terms' list.", code="invalid_term"
            )
        table = {}
        for term in terms:
            h, k, coefficient = TermValidator.validate_term(term)
            table[(h, k)] = table.get((h, k), 0) + coefficient
        return BiPoly(table)
    return BiPoly.constant(RationalValidator.parse(data))


class BiPolyField(serializers.Field):
    """
    Field for `BiPoly` values in the polynomial JSON format.

    Representation:
    - `{"terms": [[h, k, "num/den"], ...]}` sorted in graded-lex order, largest monomial first.
    """

    def to_representation(self, value):
        return poly_to_document(value)

    def to_internal_value(self, data):
        return poly_from_document(data)


def matrix_to_document(matrix):
    return [[poly_to_document(value) for value in row] for row in matrix.entries()]


def matrix_from_document(data, shape=None):
    """
    Parses a nested list of polynomial documents (or rationals) into a `PolyMatrix`.

    Args:
    - `data`: List of rows.
    - `shape`: Optional required `(rows, cols)`.

    Raises:
    - `ValidationError`: `invalid_matrix` for ragged or wrongly sized input.
    """
    if not isinstance(data, list) or not data or not all(isinstance(row, list) for row in data):
        raise ValidationError("A matrix must be a non-empty list of rows.", code="invalid_matrix")
    width = len(data[0])
    if width == 0 or any(len(row) != width for row in data):
        raise ValidationError(
            "Matrix rows must be non-empty and of equal length.", code="invalid_matrix"
        )
    if shape is not None and (len(data), width) != tuple(shape):
        raise ValidationError(
            f"Expected a {shape[0]}x{shape[1]} matrix, got {len(data)}x{width}.",
            code="invalid_matrix",
        )
    return PolyMatrix([[poly_from_document(value) for value in row] for row in data])


class PolyMatrixField(serializers.Field):
    """
    Field for `PolyMatrix` values: a list of rows of polynomial documents.

    Args:
    - `shape`: Optional `(rows, cols)` enforced on input.
    """

    def __init__(self, shape=None, **kwargs):
        self.shape = shape
        super().__init__(**kwargs)

    def to_representation(self, value):
        return matrix_to_document(value)

    def to_internal_value(self, data):
        return matrix_from_document(data, self.shape)


class RationalMatrixField(serializers.Field):
    """Rational matrices (H_n, Lambda_n, moment matrices) as rows of "num/den" strings."""

    def to_representation(self, value):
        return [[format_rational(entry) for entry in row] for row in value]

    def to_internal_value(self, data):
        if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
            raise ValidationError("A matrix must be a list of rows.", code="invalid_matrix")
        return [[RationalValidator.parse(entry) for entry in row] for row in data]


def first_error_code(errors):
    """The first error code found in a (nested) DRF `serializer.errors` structure."""
    if isinstance(errors, dict):
        for value in errors.values():
            code = first_error_code(value)
            if code:
                return code
    elif isinstance(errors, list):
        for value in errors:
            code = first_error_code(value)
            if code:
                return code
    else:
        return getattr(errors, "code", None)
    return None
