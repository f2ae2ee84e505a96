"""
Grupo J_h de matrices [[a₁, h·a₂], [a₂, a₁]] sobre Q(x) y las transformaciones
de de Jonquières (x, y) ↦ (x, (a₁₁y + a₁₂)/(a₂₁y + a₂₂)) que inducen.
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, Optional, Union

from django.conf import settings
from sympy import Poly

from core.exceptions import DegreeCapExceeded, InvalidJonqElement, MismatchedModulus
from core.exact_algebra.matrices import Mat2RF
from core.exact_algebra.polys import (
    X,
    Y,
    RatFunc,
    TriHomPoly,
    affine_degree,
    affine_poly,
    as_uni,
    homogenize,
    is_squarefree,
    uni_gcd,
    uni_in,
    uni_poly,
)
from core.cremona_maps.maps import CremonaMap

logger = logging.getLogger(__name__)

INFINITE = "infinite"
Order = Union[int, str]

# λ = traza²/det constante -> orden en PGL2
_ORDER_BY_LAMBDA = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class JonqElement:
    a1: RatFunc
    a2: RatFunc
    h: Poly

    def __post_init__(self):
        h = as_uni(self.h)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "a1", RatFunc.of(self.a1))
        object.__setattr__(self, "a2", RatFunc.of(self.a2))
        degree = h.degree()
        if degree < 4 or degree % 2:
            raise InvalidJonqElement(f"h debe tener grado par 2g+2 ≥ 4; tiene grado {degree}.")
        if not is_squarefree(h):
            raise InvalidJonqElement("h tiene raíces múltiples.")
        if self.det().is_zero:
            raise InvalidJonqElement("El determinante a₁² − h·a₂² es nulo.")

    @property
    def genus(self) -> int:
        return (self.h.degree() - 2) // 2

    def det(self) -> RatFunc:
        return self.a1 * self.a1 - self.a2 * self.a2 * self.h

    def as_matrix(self) -> Mat2RF:
        return Mat2RF(self.a1, self.a2 * self.h, self.a2, self.a1)


def identity(h) -> JonqElement:
    return JonqElement(RatFunc.of(1), RatFunc.of(0), h)


def mul(u: JonqElement, v: JonqElement) -> JonqElement:
    if u.h != v.h:
        raise MismatchedModulus("Los elementos tienen polinomios h distintos.")
    return JonqElement(u.a1 * v.a1 + u.a2 * v.a2 * u.h, u.a1 * v.a2 + u.a2 * v.a1, u.h)


def invert(u: JonqElement) -> JonqElement:
    delta = u.det()
    return JonqElement(u.a1 / delta, -u.a2 / delta, u.h)


# =========================
# ORDEN EN PGL2(Q(x))
# =========================

def trace_ratio(m: Mat2RF) -> RatFunc:
    """λ = traza² / det, invariante por escalares."""
    return m.trace() ** 2 / m.det()


def pgl_order(m: Mat2RF) -> Order:
    """Orden de la clase de m en PGL2(Q(x)): 1, 2, 3, 4, 6 o 'infinite'."""
    lam = trace_ratio(m)
    if not lam.is_constant:
        return INFINITE
    value = lam.constant_value()
    if value == 4:
        # unipotente no escalar: orden infinito en característica cero
        return 1 if m.is_scalar() else INFINITE
    if value.is_integer and int(value) in _ORDER_BY_LAMBDA:
        return _ORDER_BY_LAMBDA[int(value)]
    return INFINITE


def element_order(u: JonqElement) -> Order:
    return pgl_order(u.as_matrix())


def leminv_check(u: JonqElement) -> Dict:
    """
    Un elemento de orden finito de J_h es una involución (o la identidad).
    El informe incluye λ y el veredicto.
    """
    order = element_order(u)
    lam = trace_ratio(u.as_matrix())
    holds = order in (1, 2, INFINITE)
    if order == 1:
        verdict = "identidad"
    elif order == 2:
        verdict = "involución"
    elif order == INFINITE:
        verdict = "orden infinito"
    else:
        verdict = f"orden {order}: contradice que h sea libre de cuadrados"
        logger.warning(f"Elemento de J_h con orden {order}; h = {u.h.as_expr()}")
    return {"order": order, "lambda": lam, "lemma_holds": holds, "verdict": verdict}


# =========================
# TRANSFORMACIONES DE CREMONA
# =========================

def mat_to_cremona(m: Mat2RF) -> CremonaMap:
    """(x, y) ↦ (x, (a₁₁y + a₁₂)/(a₂₁y + a₂₂)) homogeneizada en la carta z = 1."""
    (a11, a12), (a21, a22) = m.rows()
    x, y = affine_poly(X), affine_poly(Y)

    # denominadores comunes de las dos filas
    scale_num, scale_den = a21.den * a22.den, a11.den * a12.den
    common = uni_gcd(scale_num, scale_den)
    scale_num, scale_den = scale_num.exquo(common), scale_den.exquo(common)

    numerator = (
        uni_in(a11.num * a12.den, "x") * y + uni_in(a12.num * a11.den, "x")
    ) * uni_in(scale_num, "x")
    denominator = (
        uni_in(a21.num * a22.den, "x") * y + uni_in(a22.num * a21.den, "x")
    ) * uni_in(scale_den, "x")
    degree = max(affine_degree(denominator) + 1, affine_degree(numerator))

    cap = settings.CREMONA_KIT_MAX_DEGREE
    if degree > cap:
        raise DegreeCapExceeded(f"La transformación de de Jonquières tendría grado {degree} > {cap}.")
    return CremonaMap(
        homogenize(x * denominator, degree),
        homogenize(numerator, degree),
        homogenize(denominator, degree),
        trusted=True,
    )


def to_cremona(u: JonqElement) -> CremonaMap:
    return mat_to_cremona(u.as_matrix())


def is_in_torus(m: Mat2RF, h) -> bool:
    """F_a fija y² = h si y sólo si A es proporcional a [[a₁, h·a₂], [a₂, a₁]]."""
    return m.a11 == m.a22 and m.a12 == m.a21 * RatFunc.of(as_uni(h))


def hyperelliptic_curve(h) -> TriHomPoly:
    """y²·z^{2g} − ĥ(x, z), de grado 2g + 2 = deg h."""
    h = as_uni(h)
    return homogenize(affine_poly(Y ** 2) - uni_in(h, "x"), h.degree())


def fixes_hyperelliptic(u: JonqElement) -> bool:
    """
    Comprueba (a₁y + h·a₂)² − h·(a₂y + a₁)² = (a₁² − h·a₂²)·(y² − h)
    con los denominadores de a₁ y a₂ eliminados.
    """
    A1 = uni_in(u.a1.num * u.a2.den, "x")
    A2 = uni_in(u.a2.num * u.a1.den, "x")
    h = uni_in(u.h, "x")
    y = affine_poly(Y)
    lhs = (A1 * y + h * A2) ** 2 - h * (A2 * y + A1) ** 2
    rhs = (A1 ** 2 - h * A2 ** 2) * (y ** 2 - h)
    return (lhs - rhs).is_zero


def sample_element(h, rng: random.Random, max_degree: int = 2, kind: Optional[str] = None) -> JonqElement:
    """
    Elemento aleatorio de J_h con coeficientes enteros pequeños.
    kind: None (general), "a1_zero" o "a2_zero".
    """
    def random_ratfunc():
        num = uni_poly([rng.randint(-3, 3) for _ in range(rng.randint(1, max_degree + 1))])
        den = uni_poly([rng.randint(1, 3)] + [rng.randint(-2, 2) for _ in range(rng.randint(0, 1))])
        return RatFunc(num, den)

    while True:
        a1 = RatFunc.of(0) if kind == "a1_zero" else random_ratfunc()
        a2 = RatFunc.of(0) if kind == "a2_zero" else random_ratfunc()
        if kind is None and (a1.is_zero or a2.is_zero):
            continue
        if a1.is_zero and a2.is_zero:
            continue
        return JonqElement(a1, a2, h)
