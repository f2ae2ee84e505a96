from rest_framework import serializers

from core.exact_algebra.serializers import RationalField, TriTermsField


class SingularitySerializer(serializers.Serializer):
    label = serializers.CharField(max_length=64)
    mult = serializers.IntegerField()
    coords = serializers.ListField(
        child=RationalField(), min_length=3, max_length=3, allow_null=True, required=False, default=None
    )
    ordinary = serializers.BooleanField(default=True)


class CurveSerializer(serializers.Serializer):
    """{"degree": n, "singularities": [...], "poly": términos | null}"""

    degree = serializers.IntegerField()
    singularities = SingularitySerializer(many=True, required=False, default=list)
    poly = TriTermsField(allow_null=True, required=False, default=None)
    irreducible = serializers.BooleanField(default=True)

    def validate_degree(self, value):
        if value < 1:
            raise serializers.ValidationError("El grado debe ser ≥ 1.")
        return value
