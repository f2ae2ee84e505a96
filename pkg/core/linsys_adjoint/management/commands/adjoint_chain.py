"""
Cadena de adjuntos sucesivos de una curva plana.

Uso:
    python manage.py adjoint_chain --input core/curve_model/fixtures/bertini.json
    python manage.py adjoint_chain --input ... --format text
"""

from core.commands import JsonCommand
from core.curve_model.curves import PlaneCurveModel
from core.curve_model.serializers import CurveSerializer
from core.linsys_adjoint.chain import adjoint_chain
from core.linsys_adjoint.serializers import LinSysSerializer


def _system(data):
    serializer = LinSysSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.to_system()


class Command(JsonCommand):
    help = "Itera el sistema adjunto hasta un pincel o red de género ≤ 1 y clasifica el terminal"
    serializer_class = CurveSerializer

    def run(self, data, options):
        return adjoint_chain(PlaneCurveModel.from_payload(data)).as_dict()

    def text_rows(self, report):
        rows = []
        for index, step in enumerate(report["steps"], start=1):
            entrada, salida = _system(step["input"]), _system(step["output"])
            quitadas = sum(r["count"] for r in step["removed"])
            rows.append((f"paso {index}", f"{entrada} -> {salida} (componentes fijas: {quitadas})"))
        rows.append(("terminal", str(_system(report["terminal"]))))
        rows.append(("clase", report["class"]))
        rows += [("aviso", w) for w in report["warnings"]]
        return rows
