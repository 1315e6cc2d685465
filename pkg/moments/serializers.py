from django.core.exceptions import ValidationError
from rest_framework import serializers

from moments.choices import MomentProvenanceChoices
from moments.functional import MomentFunctional
from polycore.polynomial import format_rational
from polycore.validators import TermValidator


class MomentTableField(serializers.Field):
    """`[[h, k, "num/den"], ...]` in the graded basis order."""

    def to_representation(self, value):
        return [[h, k, format_rational(number)] for h, k, number in value]

    def to_internal_value(self, data):
        if not isinstance(data, list):
            raise ValidationError("Moments must be a list of [h, k, value].", code="invalid_term")
        return [TermValidator.validate_term(item) for item in data]


class MomentFunctionalSerializer(serializers.Serializer):
    """
    Moment table document `{"cap": N, "provenance": ..., "moments": [[h, k, "num/den"], ...]}`.

    Usage:
        ```
        MomentFunctionalSerializer(functional).data
        ```
    """

    cap = serializers.IntegerField(min_value=0)
    provenance = serializers.ChoiceField(
        choices=MomentProvenanceChoices.choices,
        default=MomentProvenanceChoices.PEARSON_RECURRENCE,
    )
    moments = MomentTableField(source="table")

    def to_representation(self, instance):
        return {
            "cap": instance.cap,
            "provenance": str(instance.provenance),
            "moments": self.fields["moments"].to_representation(instance.table()),
        }

    def create(self, validated_data):
        table = {(h, k): value for h, k, value in validated_data["table"]}
        try:
            return MomentFunctional(table, validated_data["cap"], validated_data["provenance"])
        except ValueError as exc:
            raise ValidationError(str(exc), code="invalid_cap")
