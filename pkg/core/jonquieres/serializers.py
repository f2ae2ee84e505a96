from rest_framework import serializers

from core.exact_algebra.matrices import Mat2RF
from core.exact_algebra.serializers import RatFuncField, UniPolyField
from .jonq import JonqElement


class JonqElementSerializer(serializers.Serializer):
    """{"h": polinomio en x, "a1": función racional, "a2": función racional}"""

    h = UniPolyField()
    a1 = RatFuncField()
    a2 = RatFuncField()


def element_from_payload(data) -> JonqElement:
    return JonqElement(data["a1"], data["a2"], data["h"])


def element_payload(u: JonqElement) -> dict:
    return {
        "h": UniPolyField().to_representation(u.h),
        "a1": RatFuncField().to_representation(u.a1),
        "a2": RatFuncField().to_representation(u.a2),
    }


class JonqOrderRequestSerializer(serializers.Serializer):
    """Un elemento de J_h o, para el grupo de de Jonquières completo, una matriz 2x2."""

    h = UniPolyField(required=False)
    a1 = RatFuncField(required=False)
    a2 = RatFuncField(required=False)
    matrix = serializers.ListField(
        child=serializers.ListField(child=RatFuncField(), min_length=2, max_length=2),
        min_length=2,
        max_length=2,
        required=False,
    )

    def validate(self, attrs):
        element_keys = {"h", "a1", "a2"} & set(attrs)
        if "matrix" in attrs and element_keys:
            raise serializers.ValidationError("Indique un elemento (h, a1, a2) o una matriz, no ambos.")
        if "matrix" not in attrs and element_keys != {"h", "a1", "a2"}:
            raise serializers.ValidationError("Faltan campos: se requieren h, a1 y a2, o bien matrix.")
        return attrs


def matrix_from_payload(rows) -> Mat2RF:
    (a11, a12), (a21, a22) = rows
    return Mat2RF(a11, a12, a21, a22)


class JonqMulRequestSerializer(serializers.Serializer):
    factors = JonqElementSerializer(many=True, allow_empty=False)
