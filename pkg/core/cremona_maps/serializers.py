from rest_framework import serializers

from core.exact_algebra.polys import TriHomPoly
from core.exact_algebra.serializers import TriTermsField
from .maps import CremonaMap


class CremonaMapSerializer(serializers.Serializer):
    """{"deg": d, "components": [términos, términos, términos], "trusted": bool}"""

    deg = serializers.IntegerField(min_value=1)
    components = serializers.ListField(child=TriTermsField(), min_length=3, max_length=3)
    trusted = serializers.BooleanField(default=False)


def map_from_payload(data) -> CremonaMap:
    components = [TriHomPoly.from_terms(terms, degree=data["deg"]) for terms in data["components"]]
    return CremonaMap(*components, trusted=data.get("trusted", False))


def map_payload(F: CremonaMap) -> dict:
    field = TriTermsField()
    return {
        "deg": F.degree,
        "components": [field.to_representation(f) for f in F.components],
        "trusted": F.trusted,
    }


class ComposeRequestSerializer(serializers.Serializer):
    maps = CremonaMapSerializer(many=True, allow_empty=False)


class FixCheckRequestSerializer(serializers.Serializer):
    map = CremonaMapSerializer()
    curve = TriTermsField()
    curve_degree = serializers.IntegerField(min_value=1, required=False)

    def validate_curve(self, value):
        if not value:
            raise serializers.ValidationError("La curva no puede ser el polinomio nulo.")
        return value
