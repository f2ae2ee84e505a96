"""
Clasifica una curva por el sistema terminal de su cadena de adjuntos y el
tipo de involución que corresponde a esa clase.
"""

from core.commands import JsonCommand
from core.curve_model.curves import PlaneCurveModel, genus
from core.curve_model.serializers import CurveSerializer
from core.linsys_adjoint.chain import adjoint_chain


class Command(JsonCommand):
    help = "Clasifica la curva: pincel racional (de Jonquières), red elíptica (Geiser) o pincel elíptico (Bertini)"
    serializer_class = CurveSerializer

    def run(self, data, options):
        curve = PlaneCurveModel.from_payload(data)
        chain = adjoint_chain(curve)
        return {
            "genus": genus(curve),
            "steps": len(chain.steps),
            "terminal": chain.terminal.as_dict(),
            "class": chain.classification,
            "involution": chain.involution_type,
            "warnings": list(chain.warnings),
        }
