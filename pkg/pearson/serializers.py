from django.core.exceptions import ValidationError
from rest_framework import serializers

from diffcalc.carrier import WeightCarrier
from pearson.families import FamilyForm, FamilySpec, SuetinSplitting
from polycore.matrix import PolyMatrix
from polycore.polynomial import format_rational
from polycore.serializers import (
    BiPolyField,
    PolyMatrixField,
    first_error_code,
    poly_from_document,
    poly_to_document,
)
from polycore.validators import RationalValidator


class PsiField(serializers.Field):
    """Ψ as the two-entry list `[d, e]` of polynomial documents."""

    def to_representation(self, value):
        return [poly_to_document(value.entry(0, 0)), poly_to_document(value.entry(1, 0))]

    def to_internal_value(self, data):
        if not isinstance(data, list) or len(data) != 2:
            raise ValidationError("Ψ must be a list of two polynomials.", code="invalid_matrix")
        return PolyMatrix.column([poly_from_document(value) for value in data])


class WeightField(serializers.Field):
    """
    Factored symmetry factor `{"s": poly, "factors": [[poly, "num/den"], ...]}`.

    Raises:
    - `ValidationError`: `invalid_family_document` for constant or repeated factors.
    """

    def to_representation(self, value):
        return {
            "s": poly_to_document(value.s),
            "factors": [
                [poly_to_document(base), format_rational(exponent)]
                for base, exponent in value.factors
            ],
        }

    def to_internal_value(self, data):
        if not isinstance(data, dict):
            raise ValidationError("A weight must be an object.", code="invalid_family_document")
        exponential = poly_from_document(data.get("s", 0))
        factors = []
        for item in data.get("factors", []):
            if not isinstance(item, list) or len(item) != 2:
                raise ValidationError(
                    "A weight factor must be [polynomial, exponent].",
                    code="invalid_family_document",
                )
            factors.append((poly_from_document(item[0]), RationalValidator.parse(item[1])))
        try:
            return WeightCarrier(s=exponential, factors=tuple(factors))
        except ValueError as exc:
            raise ValidationError(str(exc), code="invalid_family_document")


class ParametersField(serializers.Field):
    """Named rational parameters, `{"mu": "1/2"}`."""

    def to_representation(self, value):
        return {name: format_rational(number) for name, number in sorted(value.items())}

    def to_internal_value(self, data):
        if not isinstance(data, dict):
            raise ValidationError("Parameters must be an object.", code="invalid_parameter")
        return {str(name): RationalValidator.parse(number) for name, number in data.items()}


class FamilyFormSerializer(serializers.Serializer):
    """
    Serializer for one (Φ, Ψ, ω) triple.

    Fields:
    - `phi`: 2x2 polynomial matrix.
    - `psi`: `[d, e]`.
    - `weight`: Factored ω, or null when only the weight-free routes apply.
    """

    phi = PolyMatrixField(shape=(2, 2))
    psi = PsiField()
    weight = WeightField(required=False, allow_null=True, default=None)

    def validate(self, attrs):
        FamilyForm(attrs["phi"], attrs["psi"], attrs.get("weight"))
        return attrs


class SplittingSerializer(serializers.Serializer):
    a1 = BiPolyField()
    c1 = BiPolyField()


class FamilySpecSerializer(serializers.Serializer):
    """
    Serializer for the family JSON document.

    Fields:
    - `name`, `description`
    - `phi`, `psi`, `weight`: The original form.
    - `params`: Named rational parameters.
    - `diagonal_reduction`: Optional diagonal form (same shape as the original form).
    - `splitting`: Optional `{"a1": poly, "c1": poly}` for the diagonal reduction.

    Usage:
        ```
        serializer = FamilySpecSerializer(data=document)
        serializer.is_valid(raise_exception=True)
        family = serializer.save()
        FamilySpecSerializer(family).data
        ```
    """

    name = serializers.CharField()
    description = serializers.CharField(required=False, allow_blank=True, default="")
    phi = PolyMatrixField(shape=(2, 2))
    psi = PsiField()
    weight = WeightField(required=False, allow_null=True, default=None)
    params = ParametersField(source="parameters", required=False, default=dict)
    diagonal_reduction = FamilyFormSerializer(required=False, allow_null=True, default=None)
    splitting = SplittingSerializer(required=False, allow_null=True, default=None)

    @staticmethod
    def build(attrs):
        diagonal = attrs.get("diagonal_reduction")
        splitting = attrs.get("splitting")
        return FamilySpec(
            name=attrs["name"],
            phi=attrs["phi"],
            psi=attrs["psi"],
            weight=attrs.get("weight"),
            params=dict(attrs.get("parameters") or {}),
            diagonal_reduction=FamilyForm(**diagonal) if diagonal else None,
            splitting=SuetinSplitting(**splitting) if splitting else None,
            description=attrs.get("description", ""),
        )

    def validate(self, attrs):
        self.build(attrs)
        return attrs

    def create(self, validated_data):
        return self.build(validated_data)


def parse_family_document(document):
    """
    Parses a family JSON document into a `FamilySpec`.

    Raises:
    - `ValidationError`: Carrying the first field-level code (for example `decimal_rejected`),
      or `invalid_family_document`.
    """
    if not isinstance(document, dict):
        raise ValidationError(
            "A family document must be a JSON object.", code="invalid_family_document"
        )
    serializer = FamilySpecSerializer(data=document)
    if not serializer.is_valid():
        code = first_error_code(serializer.errors)
        if code in (None, "invalid", "required", "null"):
            code = "invalid_family_document"
        raise ValidationError(f"Invalid family document: {serializer.errors}", code=code)
    return serializer.save()


def family_to_document(family):
    return FamilySpecSerializer(family).data