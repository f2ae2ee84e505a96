"""
Producto de elementos de J_h: {"factors": [u1, u2, ...]} devuelve u1·u2·...
"""

from functools import reduce

from core.commands import JsonCommand
from core.exact_algebra.serializers import RatFuncField
from core.jonquieres.jonq import element_order, mul
from core.jonquieres.serializers import JonqMulRequestSerializer, element_from_payload, element_payload


class Command(JsonCommand):
    help = "Multiplica elementos de J_h con el mismo h"
    serializer_class = JonqMulRequestSerializer

    def run(self, data, options):
        factors = [element_from_payload(f) for f in data["factors"]]
        product = reduce(mul, factors)
        return {
            "product": element_payload(product),
            "det": RatFuncField().to_representation(product.det()),
            "order": element_order(product),
        }
