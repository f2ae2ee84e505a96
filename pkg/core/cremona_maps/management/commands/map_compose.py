"""
Compone transformaciones de Cremona: {"maps": [F1, F2, ..., Fk]} produce
F1 ∘ F2 ∘ ... ∘ Fk (Fk se aplica primero).

Uso:
    python manage.py map_compose --input core/cremona_maps/fixtures/phi_cuadrado.json
"""

from core.commands import JsonCommand
from core.cremona_maps.maps import compose_all, is_identity, is_in_linear_G_family
from core.cremona_maps.serializers import ComposeRequestSerializer, map_from_payload, map_payload


class Command(JsonCommand):
    help = "Compone transformaciones de Cremona y normaliza el contenido"
    serializer_class = ComposeRequestSerializer

    def run(self, data, options):
        maps = [map_from_payload(m) for m in data["maps"]]
        result = compose_all(maps)
        warnings = []
        if not result.trusted:
            warnings.append("Alguna terna de entrada no es de confianza: la birracionalidad no se verificó.")
        return {
            "map": map_payload(result),
            "deg": result.degree,
            "is_identity": is_identity(result),
            "in_linear_G_family": is_in_linear_G_family(result),
            "warnings": warnings,
        }

    def text_rows(self, report):
        return [
            ("grado", report["deg"]),
            ("identidad", report["is_identity"]),
            ("familia G", report["in_linear_G_family"]),
        ] + [("aviso", w) for w in report["warnings"]]
