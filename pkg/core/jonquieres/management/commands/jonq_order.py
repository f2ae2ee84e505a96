"""
Orden en PGL2(Q(x)) de un elemento de J_h o de una matriz 2x2 cualquiera.

Para un elemento de J_h el informe comprueba además que un orden finito sólo
puede ser 1 o 2; si no, sale con código 2.
"""

from core.commands import JsonCommand
from core.exact_algebra.serializers import RatFuncField
from core.jonquieres.jonq import leminv_check, pgl_order, trace_ratio
from core.jonquieres.serializers import (
    JonqOrderRequestSerializer,
    element_from_payload,
    element_payload,
    matrix_from_payload,
)


class Command(JsonCommand):
    help = "Clasifica el orden (1, 2, 3, 4, 6 o infinito) mediante λ = traza²/det"
    serializer_class = JonqOrderRequestSerializer

    def run(self, data, options):
        if "matrix" in data:
            m = matrix_from_payload(data["matrix"])
            return {
                "order": pgl_order(m),
                "lambda": RatFuncField().to_representation(trace_ratio(m)),
            }

        u = element_from_payload(data)
        check = leminv_check(u)
        report = {
            "element": element_payload(u),
            "order": check["order"],
            "lambda": RatFuncField().to_representation(check["lambda"]),
            "lemma_holds": check["lemma_holds"],
            "verdict": check["verdict"],
            "valid": check["lemma_holds"],
        }
        if not check["lemma_holds"]:
            report["detail"] = check["verdict"]
        return report

    def text_rows(self, report):
        return [(k, report[k]) for k in ("order", "verdict") if k in report]
