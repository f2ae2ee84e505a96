"""
Género geométrico de una curva plana con singularidades ordinarias.

Uso:
    python manage.py genus --input core/curve_model/fixtures/geiser.json
    python manage.py genus --json '{"degree": 6, "singularities": [...]}'
"""

from core.commands import JsonCommand
from core.curve_model.curves import PlaneCurveModel, genus
from core.curve_model.serializers import CurveSerializer


class Command(JsonCommand):
    help = "Calcula el género geométrico (d−1)(d−2)/2 − Σ m(m−1)/2 de una curva"
    serializer_class = CurveSerializer

    def run(self, data, options):
        curve = PlaneCurveModel.from_payload(data)
        return {"degree": curve.degree, "multiplicities": curve.multiplicities, "genus": genus(curve)}
