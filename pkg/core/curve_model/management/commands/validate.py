"""
Valida los datos de una curva: género ≥ 0, multiplicidades ≤ grado y, si hay
polinomio y coordenadas, la multiplicidad real en cada punto declarado.

Uso:
    python manage.py validate --input core/curve_model/fixtures/sextica_dos_triples_poly.json
"""

from core.commands import JsonCommand
from core.curve_model.curves import PlaneCurveModel, validate
from core.curve_model.serializers import CurveSerializer


class Command(JsonCommand):
    help = "Valida una curva plana y emite un informe de aprobado/fallido"
    serializer_class = CurveSerializer

    def run(self, data, options):
        return validate(PlaneCurveModel.from_payload(data, strict=False))

    def text_rows(self, report):
        rows = [("grado", report["degree"]), ("género", report["genus"])]
        rows += [("error", e) for e in report["errors"]]
        rows += [("aviso", w) for w in report["warnings"]]
        return rows
