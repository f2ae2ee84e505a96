from rest_framework import serializers

from .chain import CLASSIFICATIONS
from .linsys import LINE, CONIC, LinSysData


class LinSysSerializer(serializers.Serializer):
    """{"degree": n, "mults": {etiqueta: μ}}"""

    degree = serializers.IntegerField(min_value=0)
    mults = serializers.DictField(child=serializers.IntegerField(min_value=0), required=False, default=dict)

    def to_system(self) -> LinSysData:
        return LinSysData(self.validated_data["degree"], self.validated_data["mults"])


class RemovedComponentSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=[LINE, CONIC])
    through = serializers.ListField(child=serializers.CharField())
    count = serializers.IntegerField(min_value=1)
    subtracted = LinSysSerializer()


class PencilReductionSerializer(serializers.Serializer):
    content = serializers.IntegerField(min_value=2)
    pencil = LinSysSerializer()


class ChainStepSerializer(serializers.Serializer):
    input = LinSysSerializer()
    raw = LinSysSerializer()
    removed = RemovedComponentSerializer(many=True)
    reduced = LinSysSerializer()
    pencil = PencilReductionSerializer(allow_null=True)
    output = LinSysSerializer()
    warnings = serializers.ListField(child=serializers.CharField())


class ChainReportSerializer(serializers.Serializer):
    """Esquema del informe de `adjoint_chain`; permite volver a leer la salida."""

    steps = ChainStepSerializer(many=True)
    terminal = LinSysSerializer()
    genus = serializers.IntegerField()
    dim = serializers.IntegerField()
    warnings = serializers.ListField(child=serializers.CharField(), allow_empty=True)

    def get_fields(self):
        fields = super().get_fields()
        fields["class"] = serializers.ChoiceField(choices=CLASSIFICATIONS)
        return fields

    def validate(self, attrs):
        steps = attrs["steps"]
        for previous, following in zip(steps, steps[1:]):
            if previous["output"] != following["input"]:
                raise serializers.ValidationError("La salida de un paso no coincide con la entrada del siguiente.")
        if steps and steps[-1]["output"] != attrs["terminal"]:
            raise serializers.ValidationError("El sistema terminal no coincide con la salida del último paso.")
        return attrs
