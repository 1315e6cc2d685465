from rest_framework import serializers

from catalog.models import FamilyDocument


class ParameterDomainSerializer(serializers.Serializer):
    name = serializers.CharField()
    domain = serializers.CharField(source="describe")


class CatalogEntrySerializer(serializers.Serializer):
    """
    One row of `family list`.

    Fields:
    - `name`, `example`, `description`
    - `parameters`: Names with their documented domains.
    - `expectations`: Documented flags.
    """

    name = serializers.CharField()
    example = serializers.IntegerField()
    description = serializers.CharField()
    parameters = ParameterDomainSerializer(many=True)
    expectations = serializers.SerializerMethodField()

    def get_expectations(self, instance):
        return dict(sorted(instance.expectations.items()))


class FamilyDocumentSerializer(serializers.ModelSerializer):
    class Meta:
        model = FamilyDocument
        fields = ("name", "description", "document", "created_at")
