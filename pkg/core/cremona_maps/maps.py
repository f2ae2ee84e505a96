"""
Transformaciones de Cremona del plano como ternas de polinomios homogéneos
coprimos del mismo grado.

Toda terna se guarda normalizada: sin contenido común y con el coeficiente
principal (orden lex x > y > z) de la primera componente no nula igual a 1.
Con esa forma canónica la identidad es exactamente (x, y, z).
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Mapping, Optional, Sequence, Tuple

from django.conf import settings
from sympy import Rational

from core.exceptions import (
    DegenerateComposition,
    DegreeCapExceeded,
    DegreeMismatch,
    InvalidParameters,
    ZeroPolynomialError,
)
from core.exact_algebra.polys import (
    X,
    Y,
    RatFunc,
    TriHomPoly,
    affine_degree,
    affine_poly,
    homogenize,
    to_rational,
    tri_content_gcd,
    tri_divides,
    tri_exquo,
    uni_in,
)
from core.linsys_adjoint.linsys import LinSysData

logger = logging.getLogger(__name__)

COORDINATES = tuple(TriHomPoly.coordinate(i) for i in range(3))


def _normalized(components: Sequence[TriHomPoly]) -> Tuple[TriHomPoly, TriHomPoly, TriHomPoly]:
    common = tri_content_gcd(*components)
    reduced = [tri_exquo(f, common) for f in components]
    lead = next(f for f in reduced if not f.is_zero).leading_coefficient()
    return tuple(f * (1 / lead) for f in reduced)


@dataclass(frozen=True)
class CremonaMap:
    """
    (f0 : f1 : f2). `trusted` indica que la birracionalidad está garantizada
    por construcción; para ternas del usuario no se verifica.
    """

    f0: TriHomPoly
    f1: TriHomPoly
    f2: TriHomPoly
    trusted: bool = False

    def __post_init__(self):
        components = (self.f0, self.f1, self.f2)
        if len({f.degree for f in components}) != 1:
            raise DegreeMismatch(
                f"Las componentes tienen grados distintos: {[f.degree for f in components]}."
            )
        if all(f.is_zero for f in components):
            raise ZeroPolynomialError("Las tres componentes son nulas.")
        f0, f1, f2 = _normalized(components)
        if f0.degree < 1:
            raise InvalidParameters("Una terna constante no define una transformación del plano.")
        object.__setattr__(self, "f0", f0)
        object.__setattr__(self, "f1", f1)
        object.__setattr__(self, "f2", f2)

    @property
    def degree(self) -> int:
        return self.f0.degree

    @property
    def components(self) -> Tuple[TriHomPoly, TriHomPoly, TriHomPoly]:
        return self.f0, self.f1, self.f2

    def __eq__(self, other):
        if not isinstance(other, CremonaMap):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return f"({self.f0} : {self.f1} : {self.f2})"


IDENTITY = CremonaMap(*COORDINATES, trusted=True)


# =========================
# FAMILIAS EXPLÍCITAS
# =========================

def make_linear_G(a, b, c) -> CremonaMap:
    """(a x : y + b x : z + c x); fija punto a punto la recta x = 0."""
    a, b, c = (to_rational(v) for v in (a, b, c))
    if a == 0:
        raise InvalidParameters("El parámetro a debe ser no nulo.")
    x, y, z = COORDINATES
    return CremonaMap(x * a, y + x * b, z + x * c, trusted=True)


def make_linear_G_inverse(a, b, c) -> CremonaMap:
    a, b, c = (to_rational(v) for v in (a, b, c))
    if a == 0:
        raise InvalidParameters("El parámetro a debe ser no nulo.")
    return make_linear_G(1 / a, -b / a, -c / a)


def linear_G_parameters(F: CremonaMap) -> Optional[Tuple[Rational, Rational, Rational]]:
    """(a, b, c) si F = (a x : y + b x : z + c x) salvo escalar; None en otro caso."""
    if F.degree != 1:
        return None
    coeff = [{m: c for m, c in f.terms().items()} for f in F.components]
    ex, ey, ez = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    if set(coeff[0]) != {ex} or set(coeff[1]) - {ex, ey} or set(coeff[2]) - {ex, ez}:
        return None
    scale = coeff[1].get(ey)
    if not scale or coeff[2].get(ez) != scale:
        return None
    return coeff[0][ex] / scale, coeff[1].get(ex, 0) / scale, coeff[2].get(ex, 0) / scale


def is_in_linear_G_family(F: CremonaMap) -> bool:
    return linear_G_parameters(F) is not None


def make_H_element(alpha, beta) -> CremonaMap:
    """
    Homogeneización de (x, y) ↦ (x / (α(y)x + β(y)), y) en la carta z = 1.
    α y β son funciones racionales en la variable y.
    """
    alpha, beta = RatFunc.of(alpha), RatFunc.of(beta)
    if beta.is_zero:
        raise InvalidParameters("β no puede ser nula.")
    a_num, a_den = uni_in(alpha.num, "y"), uni_in(alpha.den, "y")
    b_num, b_den = uni_in(beta.num, "y"), uni_in(beta.den, "y")
    x, y = affine_poly(X), affine_poly(Y)

    numerator = x * a_den * b_den
    denominator = a_num * b_den * x + b_num * a_den
    degree = max(affine_degree(numerator), affine_degree(denominator) + 1)
    return CremonaMap(
        homogenize(numerator, degree),
        homogenize(y * denominator, degree),
        homogenize(denominator, degree),
        trusted=True,
    )


def make_H_inverse(alpha, beta) -> CremonaMap:
    alpha, beta = RatFunc.of(alpha), RatFunc.of(beta)
    if beta.is_zero:
        raise InvalidParameters("β no puede ser nula.")
    return make_H_element(-alpha / beta, RatFunc.of(1) / beta)


def make_phi(mu, nu) -> CremonaMap:
    """Involución cuadrática (−x(μy+νz) : y(x+μy+νz) : z(x+μy+νz))."""
    mu, nu = to_rational(mu), to_rational(nu)
    if mu == 0 and nu == 0:
        raise InvalidParameters("μ y ν no pueden ser ambos nulos.")
    x, y, z = COORDINATES
    linear = y * mu + z * nu
    return CremonaMap(-(x * linear), y * (x + linear), z * (x + linear), trusted=True)


# =========================
# GRUPO
# =========================

def compose(F: CremonaMap, G: CremonaMap) -> CremonaMap:
    """F ∘ G: sustituye las componentes de G en F y quita el contenido."""
    cap = settings.CREMONA_KIT_MAX_DEGREE
    if F.degree * G.degree > cap:
        raise DegreeCapExceeded(
            f"La composición tendría grado {F.degree * G.degree}, por encima del tope {cap}."
        )
    components = [f.substitute(G.components) for f in F.components]
    if all(f.is_zero for f in components):
        raise DegenerateComposition("La composición anula las tres componentes.")
    result = CremonaMap(*components, trusted=F.trusted and G.trusted)
    logger.debug(f"Composición de grados {F.degree}·{G.degree} -> {result.degree}")
    return result


def compose_all(maps: Sequence[CremonaMap]) -> CremonaMap:
    """maps[0] ∘ maps[1] ∘ ... ∘ maps[-1]."""
    if not maps:
        return IDENTITY
    return reduce(compose, maps)


def is_identity(F: CremonaMap) -> bool:
    return F.components == COORDINATES


def commutator(F: CremonaMap, G: CremonaMap, F_inv: CremonaMap, G_inv: CremonaMap) -> CremonaMap:
    return compose_all([F, G, F_inv, G_inv])


def order_up_to(F: CremonaMap, bound: int) -> Optional[int]:
    """Menor k ≤ bound con F^k = id; None si no existe o si el grado supera el tope."""
    power = F
    for k in range(1, bound + 1):
        if is_identity(power):
            return k
        if k == bound:
            break
        try:
            power = compose(power, F)
        except DegreeCapExceeded:
            logger.debug(f"order_up_to: tope de grado alcanzado en la potencia {k + 1}")
            return None
    return None


# =========================
# PUNTOS Y CURVAS FIJAS
# =========================

def evaluate(F: CremonaMap, point: Sequence) -> Optional[Tuple[Rational, Rational, Rational]]:
    """Imagen de un punto racional, con la primera coordenada no nula igual a 1; None si F no está definida."""
    image = [f.evaluate(point) for f in F.components]
    lead = next((v for v in image if v != 0), None)
    if lead is None:
        return None
    return tuple(v / lead for v in image)


def fixes_curve_pointwise(F: CremonaMap, c: TriHomPoly) -> bool:
    """c divide a los tres menores f_i·x_j − f_j·x_i: F(p) ∥ p en todo punto de c donde F está definida."""
    if c.is_zero:
        raise ZeroPolynomialError("La curva no puede ser el polinomio nulo.")
    x, y, z = COORDINATES
    f0, f1, f2 = F.components
    minors = (f0 * y - f1 * x, f0 * z - f2 * x, f1 * z - f2 * y)
    return all(tri_divides(c, m) for m in minors)


def free_intersection(L: LinSysData, M: LinSysData, shared: Optional[Mapping[str, str]] = None) -> int:
    """
    n_L·n_M − Σ μ_L·μ_M sobre los puntos base compartidos. Sin correspondencia
    explícita se comparten las etiquetas comunes.
    """
    if shared is None:
        shared = {label: label for label in L.labels if M.mult(label)}
    return L.degree * M.degree - sum(L.mult(a) * M.mult(b) for a, b in shared.items())
