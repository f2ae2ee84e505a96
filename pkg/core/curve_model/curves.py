"""
Curvas planas dadas por su grado y sus singularidades ordinarias.

Un punto sin coordenadas es una etiqueta abstracta en posición general;
las coordenadas sólo sirven para contrastar los datos declarados contra un
polinomio de definición.
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from functools import reduce
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Rational

from core.exceptions import (
    DegreeMismatch,
    InconsistentCurveData,
    NonOrdinarySingularity,
    ZeroPolynomialError,
)
from core.exact_algebra.polys import GENS, TriHomPoly, format_rational, to_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointSpec:
    label: str
    coordinates: Optional[Tuple[Rational, Rational, Rational]] = None

    def __post_init__(self):
        if self.coordinates is not None:
            coords = tuple(to_rational(c) for c in self.coordinates)
            if len(coords) != 3:
                raise InconsistentCurveData(f"El punto {self.label} necesita tres coordenadas.")
            if all(c == 0 for c in coords):
                raise InconsistentCurveData(f"El punto {self.label} tiene coordenadas (0:0:0).")
            object.__setattr__(self, "coordinates", coords)


@dataclass(frozen=True)
class SingularityData:
    point: PointSpec
    multiplicity: int
    ordinary: bool = True

    def __post_init__(self):
        if self.multiplicity < 2:
            raise InconsistentCurveData(
                f"La multiplicidad en {self.point.label} debe ser ≥ 2 (se recibió {self.multiplicity})."
            )
        if not self.ordinary:
            raise NonOrdinarySingularity(
                f"La singularidad en {self.point.label} no es ordinaria; sólo se modelan puntos ordinarios."
            )

    @property
    def label(self) -> str:
        return self.point.label


def _is_perfect_power(f: TriHomPoly) -> bool:
    _, factors = f.poly.sqf_list()
    exponents = [k for _, k in factors]
    return bool(exponents) and reduce(gcd, exponents) >= 2


@dataclass(frozen=True)
class PlaneCurveModel:
    """
    Curva plana de grado `degree` con singularidades ordinarias.

    Con strict=False se aceptan datos imposibles (multiplicidad mayor que el
    grado, género negativo) para que `validate` pueda informarlos.
    """

    degree: int
    singularities: Tuple[SingularityData, ...] = ()
    defining_poly: Optional[TriHomPoly] = None
    irreducible: bool = True
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "singularities", tuple(self.singularities))
        if self.degree < 1:
            raise InconsistentCurveData(f"El grado de la curva debe ser ≥ 1 (se recibió {self.degree}).")

        labels = [s.label for s in self.singularities]
        duplicated = sorted({l for l in labels if labels.count(l) > 1})
        if duplicated:
            raise InconsistentCurveData(f"Etiquetas repetidas: {', '.join(duplicated)}.")

        if self.defining_poly is not None:
            if self.defining_poly.is_zero:
                raise ZeroPolynomialError("El polinomio de definición es nulo.")
            if self.defining_poly.degree != self.degree:
                raise DegreeMismatch(
                    f"El polinomio tiene grado {self.defining_poly.degree} y la curva {self.degree}."
                )
            if _is_perfect_power(self.defining_poly):
                raise InconsistentCurveData("El polinomio de definición es una potencia perfecta.")

        if self.strict:
            problems = structural_errors(self)
            if problems:
                raise InconsistentCurveData(" ".join(problems))

    @property
    def multiplicities(self) -> List[int]:
        return [s.multiplicity for s in self.singularities]

    @classmethod
    def general(cls, degree: int, multiplicities: Sequence[int], prefix: str = "p", **kwargs):
        """Modelo con puntos abstractos p1, p2, ... en posición general."""
        singularities = [
            SingularityData(PointSpec(f"{prefix}{i}"), m)
            for i, m in enumerate(multiplicities, start=1)
        ]
        return cls(degree, tuple(singularities), **kwargs)

    @classmethod
    def from_payload(cls, data: Dict[str, Any], strict: bool = True) -> "PlaneCurveModel":
        singularities = tuple(
            SingularityData(
                PointSpec(s["label"], tuple(s["coords"]) if s.get("coords") else None),
                s["mult"],
                s.get("ordinary", True),
            )
            for s in data.get("singularities", [])
        )
        poly = data.get("poly")
        defining = TriHomPoly.from_terms(poly, degree=data["degree"]) if poly is not None else None
        return cls(
            data["degree"],
            singularities,
            defining,
            irreducible=data.get("irreducible", True),
            strict=strict,
        )

    def as_payload(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "singularities": [
                {
                    "label": s.label,
                    "mult": s.multiplicity,
                    "coords": [format_rational(c) for c in s.point.coordinates]
                    if s.point.coordinates else None,
                }
                for s in self.singularities
            ],
            "poly": [[list(m), format_rational(c)] for m, c in self.defining_poly.terms().items()]
            if self.defining_poly is not None else None,
        }


def genus(c: PlaneCurveModel) -> int:
    """(d−1)(d−2)/2 − Σ m(m−1)/2 para singularidades ordinarias."""
    d = c.degree
    return (d - 1) * (d - 2) // 2 - sum(m * (m - 1) // 2 for m in c.multiplicities)


def structural_errors(c: PlaneCurveModel) -> List[str]:
    errors = []
    for s in c.singularities:
        if s.multiplicity > c.degree:
            errors.append(
                f"La multiplicidad {s.multiplicity} en {s.label} excede el grado {c.degree}."
            )
    g = genus(c)
    if g < 0:
        errors.append(f"El género calculado es negativo ({g}).")
    return errors


def multiplicity_at(f: TriHomPoly, point: Sequence) -> int:
    """Menor k tal que alguna derivada parcial de orden k de f no se anula en el punto."""
    if f.is_zero:
        raise ZeroPolynomialError("La multiplicidad en un punto no está definida para el polinomio nulo.")
    coords = [to_rational(v) for v in point]
    if all(v == 0 for v in coords):
        raise InconsistentCurveData("El punto (0:0:0) no es un punto proyectivo.")

    level = {f.poly}
    for k in range(f.degree + 1):
        if any(p.eval(dict(zip(GENS, coords))) != 0 for p in level):
            return k
        level = {p.diff(v) for p in level for v in GENS}
        level = {p for p in level if not p.is_zero}
    return f.degree


def validate(c: PlaneCurveModel) -> Dict[str, Any]:
    """Informe de consistencia: género, multiplicidades y, si hay polinomio, contraste punto a punto."""
    errors = structural_errors(c)
    warnings = []
    checks = []

    if c.defining_poly is not None:
        if c.irreducible:
            warnings.append("La irreducibilidad del polinomio es declarada por el usuario, no se verifica.")
        for s in c.singularities:
            if s.point.coordinates is None:
                continue
            found = multiplicity_at(c.defining_poly, s.point.coordinates)
            checks.append({"label": s.label, "declared": s.multiplicity, "computed": found})
            if found != s.multiplicity:
                errors.append(
                    f"En {s.label} se declaró multiplicidad {s.multiplicity} pero el polinomio tiene {found}."
                )
    elif not c.irreducible:
        warnings.append("La curva se declaró reducible; el género calculado no tiene sentido geométrico.")

    report = {
        "valid": not errors,
        "degree": c.degree,
        "genus": genus(c),
        "errors": errors,
        "warnings": warnings,
        "checks": checks,
    }
    if errors:
        logger.info(f"Curva de grado {c.degree} rechazada: {errors}")
        report["detail"] = " ".join(errors)
    return report
