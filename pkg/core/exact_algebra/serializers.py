"""
Campos DRF para leer y escribir valores exactos en JSON.

Los racionales viajan siempre como cadenas "num/den"; un float se rechaza.
"""

from rest_framework import serializers

from core.exceptions import CremonaKitError
from .polys import (
    RatFunc,
    TriHomPoly,
    as_uni,
    format_rational,
    to_rational,
    uni_from_terms,
    uni_terms,
)


def _is_exponent(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class RationalField(serializers.Field):
    default_error_messages = {
        "invalid": "Se esperaba un racional exacto 'num/den' o un entero; se recibió {value!r}.",
    }

    def to_internal_value(self, data):
        if isinstance(data, float):
            self.fail("invalid", value=data)
        try:
            return to_rational(data)
        except (TypeError, ValueError, CremonaKitError):
            self.fail("invalid", value=data)

    def to_representation(self, value):
        return format_rational(value)


class UniPolyField(serializers.Field):
    """Polinomio en x como lista dispersa [[e], "p/q"]."""

    default_error_messages = {
        "invalid": "Se esperaba una lista de términos [[exponente], 'p/q'].",
        "negative": "Exponente negativo: {exp}.",
    }

    def to_internal_value(self, data):
        if not isinstance(data, list):
            self.fail("invalid")
        terms = {}
        coefficient = RationalField()
        for item in data:
            if not (isinstance(item, (list, tuple)) and len(item) == 2):
                self.fail("invalid")
            exps, coeff = item
            if not (isinstance(exps, (list, tuple)) and len(exps) == 1 and _is_exponent(exps[0])):
                self.fail("invalid")
            if exps[0] < 0:
                self.fail("negative", exp=exps[0])
            terms[exps[0]] = terms.get(exps[0], 0) + coefficient.to_internal_value(coeff)
        return uni_from_terms(terms)

    def to_representation(self, value):
        return [[[e], format_rational(c)] for e, c in uni_terms(as_uni(value))]


class TriTermsField(serializers.Field):
    """Polinomio homogéneo como lista dispersa [[i, j, k], "p/q"]."""

    default_error_messages = {
        "invalid": "Se esperaba una lista de términos [[i, j, k], 'p/q'].",
        "negative": "Exponentes negativos en {exps}.",
    }

    def to_internal_value(self, data):
        if not isinstance(data, list):
            self.fail("invalid")
        coefficient = RationalField()
        terms = []
        for item in data:
            if not (isinstance(item, (list, tuple)) and len(item) == 2):
                self.fail("invalid")
            exps, coeff = item
            if not (isinstance(exps, (list, tuple)) and len(exps) == 3
                    and all(_is_exponent(e) for e in exps)):
                self.fail("invalid")
            if min(exps) < 0:
                self.fail("negative", exps=exps)
            terms.append((tuple(exps), coefficient.to_internal_value(coeff)))
        return terms

    def to_representation(self, value: TriHomPoly):
        return [[list(m), format_rational(c)] for m, c in value.terms().items()]


def tri_from_terms(terms, degree=None) -> TriHomPoly:
    """Construye el polinomio y convierte el error de homogeneidad en error de validación."""
    try:
        return TriHomPoly.from_terms(terms, degree=degree)
    except CremonaKitError as exc:
        raise serializers.ValidationError(exc.detail)


class RatFuncField(serializers.Field):
    """Función racional como {"num": [...], "den": [...]}; den por defecto 1."""

    def to_internal_value(self, data):
        if isinstance(data, (int, str)) and not isinstance(data, bool):
            return RatFunc.of(RationalField().to_internal_value(data))
        if not isinstance(data, dict) or "num" not in data:
            raise serializers.ValidationError("Se esperaba {'num': [...], 'den': [...]}.")
        field = UniPolyField()
        num = field.to_internal_value(data["num"])
        den = field.to_internal_value(data.get("den", [[[0], "1/1"]]))
        if den.is_zero:
            raise serializers.ValidationError("Denominador nulo.")
        return RatFunc(num, den)

    def to_representation(self, value):
        field = UniPolyField()
        return {"num": field.to_representation(value.num), "den": field.to_representation(value.den)}
