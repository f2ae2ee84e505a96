"""
Sistemas lineales numéricos (n; μ₁, ..., μ_k) sobre puntos etiquetados en
posición general.

Sólo intervienen el grado y las multiplicidades; las fórmulas suponen
posición general de los puntos base.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from core.exceptions import (
    InconsistentSystem,
    InvalidParameters,
    NegativeDegree,
    NegativeMultiplicity,
)

logger = logging.getLogger(__name__)

LINE = "line"
CONIC = "conic"


@dataclass(frozen=True)
class LinSysData:
    """Grado n y multiplicidades μᵢ por etiqueta; las entradas nulas se descartan."""

    degree: int
    mults: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.degree < 0:
            raise NegativeDegree(f"Grado negativo: {self.degree}.")
        items = dict(self.mults)
        for label, mu in items.items():
            if mu < 0:
                raise NegativeMultiplicity(f"Multiplicidad negativa en {label}: {mu}.")
        object.__setattr__(
            self, "mults", tuple(sorted((str(l), int(m)) for l, m in items.items() if m != 0))
        )

    @classmethod
    def general(cls, degree: int, multiplicities: Sequence[int], prefix: str = "p") -> "LinSysData":
        return cls(degree, {f"{prefix}{i}": m for i, m in enumerate(multiplicities, start=1)})

    def mult(self, label: str) -> int:
        return dict(self.mults).get(label, 0)

    @property
    def labels(self) -> List[str]:
        return [l for l, _ in self.mults]

    @property
    def values(self) -> List[int]:
        return [m for _, m in self.mults]

    def signature(self) -> Tuple[int, Tuple[int, ...]]:
        """Clave de igualdad salvo biyección de etiquetas."""
        return self.degree, tuple(sorted(self.values, reverse=True))

    def scaled(self, factor: int) -> "LinSysData":
        return LinSysData(self.degree * factor, {l: m * factor for l, m in self.mults})

    def as_dict(self) -> Dict:
        return {"degree": self.degree, "mults": dict(self.mults)}

    def __str__(self):
        counts = Counter(self.values)
        parts = [f"{m}^{k}" if k > 1 else str(m) for m, k in sorted(counts.items(), reverse=True)]
        return f"({self.degree}; {','.join(parts)})" if parts else f"({self.degree}; ∅)"


def virtual_dim(L: LinSysData) -> int:
    n = L.degree
    return n * (n + 3) // 2 - sum(m * (m + 1) // 2 for m in L.values)


def member_genus(L: LinSysData) -> int:
    n = L.degree
    return (n - 1) * (n - 2) // 2 - sum(m * (m - 1) // 2 for m in L.values)


def self_intersection(L: LinSysData) -> int:
    return L.degree ** 2 - sum(m * m for m in L.values)


# =========================
# COMPONENTES FIJAS
# =========================

Rule = Tuple[str, Tuple[str, ...]]


def enabled_rules(degree: int, mults: Mapping[str, int], labels: Sequence[str]) -> List[Rule]:
    """
    Reglas de Bézout aplicables, en el orden determinista: primero rectas,
    luego cónicas; dentro de cada tipo, orden lexicográfico de etiquetas.
    """
    rules: List[Rule] = []
    for pair in combinations(labels, 2):
        if mults[pair[0]] + mults[pair[1]] > degree:
            rules.append((LINE, pair))
    for five in combinations(labels, 5):
        if sum(mults[l] for l in five) > 2 * degree:
            rules.append((CONIC, five))
    return rules


def fire(degree: int, mults: Dict[str, int], rule: Rule) -> int:
    kind, through = rule
    for label in through:
        mults[label] -= 1
    return degree - (1 if kind == LINE else 2)


def remove_fixed_components(
    L: LinSysData,
    chooser: Optional[Callable[[List[Rule]], Rule]] = None,
) -> Tuple[LinSysData, List[Dict]]:
    """
    Resta rectas y cónicas fijas hasta que ninguna regla aplique.

    `chooser` elige la siguiente regla entre las aplicables; por defecto la
    primera del orden determinista. El resultado no depende del orden.
    """
    degree = L.degree
    mults = dict(L.mults)
    labels = sorted(mults)
    fired: Counter = Counter()

    while degree >= 0:
        rules = enabled_rules(degree, mults, labels)
        if not rules:
            break
        rule = chooser(rules) if chooser else rules[0]
        degree = fire(degree, mults, rule)
        fired[rule] += 1
        logger.debug(f"Componente fija {rule[0]} por {','.join(rule[1])}: grado {degree}")

    if degree < 0 or any(m < 0 for m in mults.values()):
        raise InconsistentSystem(
            f"El sistema {L} no es consistente: quitar componentes fijas deja grado {degree} "
            f"y multiplicidades {dict(sorted(mults.items()))}."
        )

    removed = [
        {
            "kind": kind,
            "through": list(through),
            "count": count,
            "subtracted": LinSysData(
                count * (1 if kind == LINE else 2), {l: count for l in through}
            ).as_dict(),
        }
        for (kind, through), count in sorted(fired.items(), key=lambda item: (item[0][0] != LINE, item[0][1]))
    ]
    return LinSysData(degree, mults), removed


# =========================
# DESCOMPOSICIÓN EN PINCEL
# =========================

def pencil_decompose(L: LinSysData) -> Optional[Tuple[int, LinSysData]]:
    """
    Si L = c·P con c ≥ 2 y P un pincel racional (género 0, autointersección 0,
    dimensión 1), devuelve (c, P).
    """
    content = reduce(gcd, L.values, L.degree)
    if content < 2:
        return None
    primitive = LinSysData(L.degree // content, {l: m // content for l, m in L.mults})
    if member_genus(primitive) == 0 and self_intersection(primitive) == 0 and virtual_dim(primitive) == 1:
        return content, primitive
    logger.debug(f"{L} tiene contenido {content} pero {primitive} no es un pincel racional")
    return None


# =========================
# TRANSFORMACIÓN CUADRÁTICA
# =========================

def quadratic_transform(L: LinSysData, base: Sequence[str]) -> LinSysData:
    """
    Imagen de L por la transformación cuadrática con puntos base `base`.
    La imagen de la recta opuesta al punto base i conserva la etiqueta i.
    """
    base = tuple(base)
    if len(base) != 3 or len(set(base)) != 3:
        raise InvalidParameters(f"Se requieren tres etiquetas distintas, no {base}.")
    n = L.degree
    m = [L.mult(label) for label in base]
    mults = dict(L.mults)
    for i, label in enumerate(base):
        j, k = [x for x in range(3) if x != i]
        mults[label] = n - m[j] - m[k]
    return LinSysData(2 * n - sum(m), mults)


def systems_equivalent(L: LinSysData, M: LinSysData) -> bool:
    return L.signature() == M.signature()
