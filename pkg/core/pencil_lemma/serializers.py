from rest_framework import serializers

from .pencil import SEXTIC_MAX_NODES, PencilType


class PencilTypeSerializer(serializers.Serializer):
    """{"n": grado, "mults": [m₁, ..., m_k]}"""

    n = serializers.IntegerField(min_value=1)
    mults = serializers.ListField(child=serializers.IntegerField(min_value=1), allow_empty=True, default=list)

    def to_pencil(self) -> PencilType:
        return PencilType(self.validated_data["n"], self.validated_data["mults"])


class PencilCheckRequestSerializer(PencilTypeSerializer):
    """Además del tipo, multiplicidades opcionales del pincel en los nodos de una séxtica."""

    nodes = serializers.ListField(
        child=serializers.IntegerField(min_value=0),
        required=False,
        allow_null=True,
        max_length=SEXTIC_MAX_NODES,
    )


class EquationSerializer(serializers.Serializer):
    value = serializers.IntegerField()
    target = serializers.IntegerField()
    residual = serializers.IntegerField()
    holds = serializers.BooleanField()


class PencilCheckReportSerializer(serializers.Serializer):
    """Esquema del informe de `pencil_check`."""

    n = serializers.IntegerField(min_value=1)
    mults = serializers.ListField(child=serializers.IntegerField(min_value=1), allow_empty=True)
    eq1 = EquationSerializer()
    eq2 = EquationSerializer()
    eq3 = EquationSerializer()
    valid = serializers.BooleanField()

    def validate(self, attrs):
        if attrs["valid"] and not (attrs["eq1"]["holds"] and attrs["eq2"]["holds"]):
            raise serializers.ValidationError("Un informe válido requiere que se cumplan eq1 y eq2.")
        return attrs


class PencilEnumReportSerializer(serializers.Serializer):
    n_max = serializers.IntegerField(min_value=1)
    count = serializers.IntegerField(min_value=0)
    types = PencilTypeSerializer(many=True)

    def validate(self, attrs):
        if attrs["count"] != len(attrs["types"]):
            raise serializers.ValidationError("count no coincide con el número de tipos.")
        return attrs
