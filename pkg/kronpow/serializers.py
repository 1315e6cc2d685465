from rest_framework import serializers

from kronpow.choices import KronPathChoices
from polycore.serializers import PolyMatrixField


class KronRequestSerializer(serializers.Serializer):
    """
    Validates a request for a second-kind Kronecker power.

    Fields:
    - `matrix`: 2x2 matrix of rationals or polynomial documents.
    - `n`: Nonnegative power.
    - `path`: Construction path (defaults to the first recurrence).
    """

    matrix = PolyMatrixField(shape=(2, 2))
    n = serializers.IntegerField(min_value=0)
    path = serializers.ChoiceField(
        choices=KronPathChoices.choices, default=KronPathChoices.RECURRENCE_I
    )


class KronMatrixSerializer(serializers.Serializer):
    """Output document `{"n": n, "matrix": [[poly, ...], ...]}`."""

    n = serializers.IntegerField()
    matrix = PolyMatrixField(source="body")
