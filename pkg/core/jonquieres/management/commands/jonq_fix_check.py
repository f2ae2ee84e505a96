"""
Comprueba que F_a fija punto a punto la curva hiperelíptica y² = h(x):
la identidad polinómica de la forma cuadrática y la divisibilidad de los
menores de la transformación de Cremona homogeneizada.
"""

from core.commands import JsonCommand
from core.cremona_maps.maps import fixes_curve_pointwise
from core.jonquieres.jonq import fixes_hyperelliptic, hyperelliptic_curve, to_cremona
from core.jonquieres.serializers import JonqElementSerializer, element_from_payload


class Command(JsonCommand):
    help = "Verifica que un elemento de J_h fija la curva hiperelíptica y² = h(x)"
    serializer_class = JonqElementSerializer

    def run(self, data, options):
        u = element_from_payload(data)
        F = to_cremona(u)
        identity_holds = fixes_hyperelliptic(u)
        fixes = fixes_curve_pointwise(F, hyperelliptic_curve(u.h))
        report = {
            "identity_holds": identity_holds,
            "fixes_curve": fixes,
            "map_degree": F.degree,
            "curve_degree": u.h.degree(),
            "valid": identity_holds and fixes,
        }
        if not report["valid"]:
            report["detail"] = "El elemento no fija la curva hiperelíptica."
        return report
