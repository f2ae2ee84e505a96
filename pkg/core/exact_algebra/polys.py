"""
Aritmética exacta sobre Q: racionales, polinomios univariados, funciones
racionales reducidas y polinomios homogéneos en (x, y, z).

Los cálculos los hace sympy (Poly sobre QQ). Este módulo fija las
normalizaciones que el resto del motor necesita para que dos resultados
iguales sean también sintácticamente iguales.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Poly, QQ, Rational, symbols

from core.exceptions import DegreeMismatch, ZeroDenominator, ZeroPolynomialError

X, Y, Z = symbols("x y z")
GENS = (X, Y, Z)
AFFINE_GENS = (X, Y)

Scalar = Union[int, Rational, Fraction, str]
Exponents = Tuple[int, int, int]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


# =========================
# RACIONALES
# =========================

def to_rational(value: Scalar) -> Rational:
    """Convierte int, 'p/q', Fraction o Rational de sympy en un Rational exacto."""
    if isinstance(value, bool):
        raise TypeError("Un booleano no es un racional.")
    if isinstance(value, Rational):
        return value
    if isinstance(value, int):
        return Rational(value)
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if not match:
            raise ValueError(f"'{value}' no es un racional exacto de la forma num/den.")
        num, den = int(match.group(1)), int(match.group(2) or 1)
        if den == 0:
            raise ZeroDenominator(f"Denominador nulo en '{value}'.")
        return Rational(num, den)
    raise TypeError(f"Se requiere un racional exacto, no {type(value).__name__}.")


def format_rational(value: Scalar) -> str:
    q = to_rational(value)
    return f"{q.p}/{q.q}"


# =========================
# POLINOMIOS UNIVARIADOS
# =========================

def uni_zero() -> Poly:
    return Poly(0, X, domain=QQ)


def uni_poly(coefficients: Sequence[Scalar]) -> Poly:
    """Polinomio en x; coefficients[e] es el coeficiente de x**e."""
    coeffs = [to_rational(c) for c in coefficients]
    if not any(coeffs):
        return uni_zero()
    return Poly.from_list(list(reversed(coeffs)), X, domain=QQ)


def uni_from_terms(terms: Mapping[int, Scalar]) -> Poly:
    clean = {(int(e),): to_rational(c) for e, c in terms.items() if to_rational(c) != 0}
    if not clean:
        return uni_zero()
    return Poly.from_dict(clean, X, domain=QQ)


def uni_terms(p: Poly) -> List[Tuple[int, Rational]]:
    """Términos no nulos en orden de exponente decreciente."""
    return sorted(((m[0], c) for m, c in p.as_dict().items() if c != 0), reverse=True)


def as_uni(value: Union[Poly, Scalar]) -> Poly:
    if isinstance(value, Poly):
        if value.gens != (X,):
            raise ValueError(f"Se esperaba un polinomio en x, no en {value.gens}.")
        return value if value.domain == QQ else value.set_domain(QQ)
    return Poly(to_rational(value), X, domain=QQ)


def uni_gcd(p: Poly, q: Poly) -> Poly:
    """Máximo común divisor mónico; gcd(0, 0) = 0."""
    p, q = as_uni(p), as_uni(q)
    if p.is_zero and q.is_zero:
        return uni_zero()
    return p.gcd(q).monic()


def is_squarefree(h: Poly) -> bool:
    """True si gcd(h, h') es constante, es decir, h no tiene raíces múltiples."""
    h = as_uni(h)
    if h.is_zero:
        raise ZeroPolynomialError("El polinomio nulo no es libre de cuadrados.")
    return uni_gcd(h, h.diff(X)).degree() == 0


# =========================
# FUNCIONES RACIONALES
# =========================

@dataclass(frozen=True)
class RatFunc:
    """Fracción num/den reducida, con denominador mónico."""

    num: Poly
    den: Poly

    def __post_init__(self):
        num, den = as_uni(self.num), as_uni(self.den)
        if den.is_zero:
            raise ZeroDenominator("Función racional con denominador nulo.")
        if num.is_zero:
            den = as_uni(1)
        else:
            common = uni_gcd(num, den)
            num, den = num.exquo(common), den.exquo(common)
            lc = den.LC()
            num, den = num.exquo_ground(lc), den.exquo_ground(lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, value: Union["RatFunc", Poly, Scalar]) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        return cls(as_uni(value), as_uni(1))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.den.degree() == 0 and self.num.degree() <= 0

    def constant_value(self) -> Rational:
        if not self.is_constant:
            raise ValueError(f"{self} no es constante.")
        return Rational(self.num.LC()) if not self.is_zero else Rational(0)

    def __add__(self, other):
        o = RatFunc.of(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.of(other))

    def __rsub__(self, other):
        return RatFunc.of(other) - self

    def __mul__(self, other):
        o = RatFunc.of(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.of(other)
        if o.is_zero:
            raise ZeroDenominator("División por la función racional nula.")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.of(other) / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return (RatFunc.of(1) / self) ** (-exponent)
        return RatFunc(self.num ** exponent, self.den ** exponent)

    def __str__(self):
        if self.den.degree() == 0:
            return str(self.num.as_expr())
        return f"({self.num.as_expr()})/({self.den.as_expr()})"


def normalize(f: RatFunc) -> RatFunc:
    return RatFunc(f.num, f.den)


# =========================
# POLINOMIOS HOMOGÉNEOS EN (x, y, z)
# =========================

def _tri_zero() -> Poly:
    return Poly(0, *GENS, domain=QQ)


def _tri_one() -> Poly:
    return Poly(1, *GENS, domain=QQ)


@dataclass(frozen=True)
class TriHomPoly:
    """
    Polinomio homogéneo de grado `degree` en x, y, z con coeficientes en Q.
    El polinomio nulo lleva también un grado (componentes nulas de una terna).
    """

    degree: int
    poly: Poly

    def __post_init__(self):
        if self.degree < 0:
            raise DegreeMismatch(f"Grado negativo: {self.degree}.")
        poly = self.poly
        if not isinstance(poly, Poly) or poly.gens != GENS:
            poly = Poly(poly.as_expr() if isinstance(poly, Poly) else poly, *GENS, domain=QQ)
        elif poly.domain != QQ:
            poly = poly.set_domain(QQ)
        for monom in poly.as_dict():
            if sum(monom) != self.degree:
                raise DegreeMismatch(
                    f"El monomio {monom} no tiene grado total {self.degree}."
                )
        object.__setattr__(self, "poly", poly)

    # --- constructores ---

    @classmethod
    def from_terms(
        cls,
        terms: Union[Mapping[Exponents, Scalar], Iterable[Tuple[Exponents, Scalar]]],
        degree: Optional[int] = None,
    ) -> "TriHomPoly":
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Dict[Exponents, Rational] = {}
        for exps, coeff in items:
            q = to_rational(coeff)
            if q != 0:
                key = tuple(int(e) for e in exps)
                clean[key] = clean.get(key, Rational(0)) + q
        clean = {k: v for k, v in clean.items() if v != 0}
        if degree is None:
            if not clean:
                raise ZeroPolynomialError("No se puede deducir el grado del polinomio nulo.")
            degree = sum(next(iter(clean)))
        poly = Poly.from_dict(clean, *GENS, domain=QQ) if clean else _tri_zero()
        return cls(degree, poly)

    @classmethod
    def from_expr(cls, expr, degree: Optional[int] = None) -> "TriHomPoly":
        poly = Poly(expr, *GENS, domain=QQ)
        if degree is None:
            if poly.is_zero:
                raise ZeroPolynomialError("No se puede deducir el grado del polinomio nulo.")
            degree = poly.total_degree()
        return cls(degree, poly)

    @classmethod
    def zero(cls, degree: int) -> "TriHomPoly":
        return cls(degree, _tri_zero())

    @classmethod
    def one(cls) -> "TriHomPoly":
        return cls(0, _tri_one())

    @classmethod
    def coordinate(cls, index: int) -> "TriHomPoly":
        return cls(1, Poly(GENS[index], *GENS, domain=QQ))

    # --- consultas ---

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def terms(self) -> Dict[Exponents, Rational]:
        """Términos no nulos en orden lexicográfico decreciente x > y > z."""
        return dict(sorted(
            ((m, c) for m, c in self.poly.as_dict().items() if c != 0), reverse=True
        ))

    def leading_coefficient(self) -> Rational:
        return Rational(self.poly.LC())

    def evaluate(self, point: Sequence[Scalar]) -> Rational:
        a, b, c = (to_rational(v) for v in point)
        total = Rational(0)
        for (i, j, k), coeff in self.poly.as_dict().items():
            total += coeff * a ** i * b ** j * c ** k
        return total

    # --- aritmética ---

    def _aligned_degree(self, other: "TriHomPoly") -> int:
        if self.degree == other.degree or other.is_zero:
            return self.degree
        if self.is_zero:
            return other.degree
        raise DegreeMismatch(
            f"No se pueden sumar polinomios homogéneos de grados {self.degree} y {other.degree}."
        )

    def __add__(self, other: "TriHomPoly") -> "TriHomPoly":
        return TriHomPoly(self._aligned_degree(other), self.poly + other.poly)

    def __sub__(self, other: "TriHomPoly") -> "TriHomPoly":
        return TriHomPoly(self._aligned_degree(other), self.poly - other.poly)

    def __neg__(self) -> "TriHomPoly":
        return TriHomPoly(self.degree, -self.poly)

    def __mul__(self, other) -> "TriHomPoly":
        if isinstance(other, TriHomPoly):
            return TriHomPoly(self.degree + other.degree, self.poly * other.poly)
        return TriHomPoly(self.degree, self.poly.mul_ground(to_rational(other)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TriHomPoly":
        return TriHomPoly(self.degree * exponent, self.poly ** exponent)

    def partial(self, index: int) -> "TriHomPoly":
        return TriHomPoly(max(self.degree - 1, 0), self.poly.diff(GENS[index]))

    def monic(self) -> "TriHomPoly":
        """Normaliza a coeficiente principal 1 (orden lex x > y > z)."""
        if self.is_zero:
            return self
        return TriHomPoly(self.degree, self.poly.monic())

    def substitute(self, components: Sequence["TriHomPoly"]) -> "TriHomPoly":
        """self(f0, f1, f2): composición con una terna de polinomios de igual grado."""
        degrees = {c.degree for c in components}
        if len(components) != 3 or len(degrees) != 1:
            raise DegreeMismatch("La sustitución requiere tres polinomios del mismo grado.")
        e = degrees.pop()
        powers: List[List[Poly]] = [[_tri_one()] for _ in range(3)]

        def power(slot: int, k: int) -> Poly:
            cache = powers[slot]
            while len(cache) <= k:
                cache.append(cache[-1] * components[slot].poly)
            return cache[k]

        result = _tri_zero()
        for (i, j, k), coeff in self.poly.as_dict().items():
            result += (power(0, i) * power(1, j) * power(2, k)).mul_ground(coeff)
        return TriHomPoly(self.degree * e, result)

    def __str__(self):
        return str(self.poly.as_expr())


def tri_content_gcd(f: TriHomPoly, g: TriHomPoly, k: TriHomPoly) -> TriHomPoly:
    """Máximo común divisor de tres polinomios homogéneos, con coeficiente principal 1."""
    nonzero = [p.poly for p in (f, g, k) if not p.is_zero]
    if not nonzero:
        raise ZeroPolynomialError("El MCD de tres polinomios nulos no está definido.")
    common = reduce(lambda a, b: a.gcd(b), nonzero).monic()
    return TriHomPoly(common.total_degree(), common)


def tri_divides(c: TriHomPoly, f: TriHomPoly) -> bool:
    """True si existe q homogéneo con f = c·q."""
    if c.is_zero:
        raise ZeroPolynomialError("No se puede dividir por el polinomio nulo.")
    if f.is_zero:
        return True
    if f.degree < c.degree:
        return False
    _, remainder = f.poly.div(c.poly)
    return remainder.is_zero


def tri_exquo(f: TriHomPoly, c: TriHomPoly) -> TriHomPoly:
    """Cociente exacto f / c; falla si c no divide a f."""
    if not tri_divides(c, f):
        raise DegreeMismatch(f"{c} no divide a {f}.")
    if f.is_zero:
        return TriHomPoly.zero(max(f.degree - c.degree, 0))
    quotient, _ = f.poly.div(c.poly)
    return TriHomPoly(f.degree - c.degree, quotient)


# =========================
# HOMOGENEIZACIÓN
# =========================

def affine_poly(expr) -> Poly:
    """Polinomio en las coordenadas afines (x, y) de la carta z = 1."""
    return Poly(expr, *AFFINE_GENS, domain=QQ)


def uni_in(p: Poly, variable: str = "x") -> Poly:
    """Copia un polinomio univariado en x como polinomio afín en x o en y."""
    slot = {"x": 0, "y": 1}[variable]
    data = {}
    for (e,), c in as_uni(p).as_dict().items():
        key = (e, 0) if slot == 0 else (0, e)
        data[key] = c
    if not data:
        return affine_poly(0)
    return Poly.from_dict(data, *AFFINE_GENS, domain=QQ)


def homogenize(p: Poly, degree: int) -> TriHomPoly:
    """Homogeneiza un polinomio afín en (x, y) al grado dado usando z."""
    data = {}
    for (i, j), c in p.as_dict().items():
        if i + j > degree:
            raise DegreeMismatch(f"No se puede homogeneizar a grado {degree} un término de grado {i + j}.")
        data[(i, j, degree - i - j)] = c
    if not data:
        return TriHomPoly.zero(degree)
    return TriHomPoly(degree, Poly.from_dict(data, *GENS, domain=QQ))


def affine_degree(p: Poly) -> int:
    return 0 if p.is_zero else p.total_degree()
