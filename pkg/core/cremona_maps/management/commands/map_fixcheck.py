"""
Comprueba si una transformación fija punto a punto una curva:
{"map": F, "curve": términos}. Sale con código 2 si no la fija.
"""

from core.commands import JsonCommand
from core.exact_algebra.polys import TriHomPoly
from core.cremona_maps.maps import fixes_curve_pointwise
from core.cremona_maps.serializers import FixCheckRequestSerializer, map_from_payload


class Command(JsonCommand):
    help = "Prueba exacta de fijación punto a punto por divisibilidad de los menores"
    serializer_class = FixCheckRequestSerializer

    def run(self, data, options):
        F = map_from_payload(data["map"])
        curve = TriHomPoly.from_terms(data["curve"], degree=data.get("curve_degree"))
        fixes = fixes_curve_pointwise(F, curve)
        report = {"valid": fixes, "fixes": fixes, "map_degree": F.degree, "curve_degree": curve.degree}
        if not fixes:
            report["detail"] = "La transformación no fija la curva punto a punto."
        return report
