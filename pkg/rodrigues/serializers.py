from rest_framework import serializers

from moments.serializers import MomentFunctionalSerializer
from pearson.serializers import FamilyFormSerializer
from polycore.polynomial import to_text
from polycore.serializers import BiPolyField, RationalField, RationalMatrixField


class RodriguesVectorSerializer(serializers.Serializer):
    """
    `{"n": 2, "form": "original", "route": "carrier", "entries": [poly, ...], "text": [...]}`.
    """

    n = serializers.IntegerField()
    form = serializers.CharField()
    route = serializers.CharField()
    entries = serializers.ListField(child=BiPolyField())
    text = serializers.SerializerMethodField()
    division_certificate = serializers.SerializerMethodField()

    def get_text(self, instance):
        return [to_text(entry) for entry in instance.entries]

    def get_division_certificate(self, instance):
        return [
            {"numerator": numerator, "exponents": list(exponents)}
            for numerator, exponents in instance.division_certificate
        ]


class OrthogonalitySerializer(serializers.Serializer):
    holds = serializers.BooleanField()
    entries = serializers.SerializerMethodField()

    def get_entries(self, instance):
        return {str(m): value for m, value in sorted(instance.entries.items())}


class GramSerializer(serializers.Serializer):
    matrix = RationalMatrixField()
    nonsingular = serializers.BooleanField()
    diagonal = serializers.BooleanField()


class LambdaSerializer(serializers.Serializer):
    matrix = RationalMatrixField()
    shape = serializers.CharField()
    nonsingular = serializers.BooleanField()


class Cor2Serializer(serializers.Serializer):
    holds = serializers.BooleanField()
    lhs = RationalMatrixField()
    rhs = RationalMatrixField()
    phi_pairing_nonsingular = serializers.BooleanField()


class DistributionalSerializer(serializers.Serializer):
    holds = serializers.BooleanField()
    checked_degree = serializers.IntegerField()
    failures = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))


class ChangeOfBasisSerializer(serializers.Serializer):
    matrix = RationalMatrixField()
    nonsingular = serializers.BooleanField()
    exact = serializers.BooleanField()
    scale_factors = serializers.ListField(child=RationalField(), allow_null=True)


class DegreeSectionSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    polynomials = RodriguesVectorSerializer(source="vector", allow_null=True)
    construction_error = serializers.DictField(allow_null=True)
    route_agreement = serializers.DictField(child=serializers.BooleanField(allow_null=True))
    orthogonality = OrthogonalitySerializer(allow_null=True)
    H = GramSerializer(source="gram", allow_null=True)
    Lambda = LambdaSerializer(source="eigen", allow_null=True)
    Lambda_error = serializers.DictField(source="eigen_error", allow_null=True)
    Lambda_residual_zero = serializers.SerializerMethodField()
    ps = serializers.BooleanField(allow_null=True)
    exact_degree = serializers.BooleanField(allow_null=True)
    cor2 = Cor2Serializer(allow_null=True)
    distributional_identity = DistributionalSerializer(source="distributional", allow_null=True)
    change_of_basis = ChangeOfBasisSerializer(allow_null=True)
    change_of_basis_error = serializers.DictField(allow_null=True)
    implication_holds = serializers.BooleanField(allow_null=True)

    def get_Lambda_residual_zero(self, instance):
        if instance.vector is None:
            return None
        return instance.eigen is not None


class SymmetrySerializer(serializers.Serializer):
    checked = serializers.BooleanField()
    holds = serializers.BooleanField()
    residuals = serializers.ListField(child=serializers.CharField())


class SuetinSerializer(serializers.Serializer):
    form = FamilyFormSerializer(allow_null=True)
    conditions = serializers.DictField(child=serializers.BooleanField())


class QuasiDefiniteSerializer(serializers.Serializer):
    criterion = serializers.CharField()
    determinants = serializers.ListField(child=RationalField())
    nonsingular = serializers.ListField(child=serializers.BooleanField())
    consistent = serializers.BooleanField()


class VerificationReportSerializer(serializers.Serializer):
    """
    The JSON verification report: family-level flags followed by one section per degree.

    Usage:
        ```
        document = VerificationReportSerializer(verify_family(family, 3)).data
        ```
    """

    family = serializers.CharField()
    form = serializers.CharField()
    route = serializers.CharField()
    max_degree = serializers.IntegerField()
    cap = serializers.IntegerField()
    passed = serializers.BooleanField()
    outcome = serializers.SerializerMethodField()
    failures = serializers.SerializerMethodField()
    condR = serializers.SerializerMethodField()
    symmetry = serializers.SerializerMethodField()
    symmetrizable = serializers.BooleanField(allow_null=True)
    phireg = serializers.SerializerMethodField()
    drift_independent = serializers.BooleanField(allow_null=True)
    suetin = SuetinSerializer(allow_null=True)
    suetin_agrees = serializers.BooleanField(allow_null=True)
    quasi_definite = QuasiDefiniteSerializer(allow_null=True)
    expectations = serializers.DictField()
    conformance = serializers.DictField(child=serializers.BooleanField())
    moments = MomentFunctionalSerializer(source="functional")
    sections = DegreeSectionSerializer(many=True)

    def get_outcome(self, instance):
        outcome = instance.outcome()
        return None if outcome is None else str(outcome)

    def get_failures(self, instance):
        return [{"kind": str(kind), "message": message} for kind, message in instance.failures()]

    def get_condR(self, instance):
        return {str(form): value for form, value in instance.condr.items()}

    def get_symmetry(self, instance):
        return {
            str(form): SymmetrySerializer(report).data for form, report in instance.symmetry.items()
        }

    def get_phireg(self, instance):
        return {str(form): value for form, value in instance.phireg.items()}
