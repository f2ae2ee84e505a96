"""
Aritmética de los pinceles de curvas racionales (n; m₁, ..., m_k).

Un pincel de curvas racionales de grado n con puntos base de multiplicidades
mᵢ (en el plano o infinitamente próximos) cumple

    (n−1)(n−2)/2 − Σ mᵢ(mᵢ−1)/2 = 0     racionalidad
    (n+1)(n+2)/2 − Σ mᵢ(mᵢ+1)/2 = 2     dimensión del pincel

y, restando, 3n − Σ mᵢ = 2. Los puntos infinitamente próximos se tratan como
etiquetas libres: no se imponen desigualdades de proximidad.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from django.conf import settings

from core.exceptions import EnumerationBoundExceeded, InconsistentCurveData, InvalidParameters, InvalidPencilType
from core.linsys_adjoint.linsys import (
    LinSysData,
    member_genus,
    quadratic_transform,
    self_intersection,
    virtual_dim,
)

logger = logging.getLogger(__name__)

# una séxtica con sólo puntos dobles ordinarios tiene a lo sumo 10
SEXTIC_MAX_NODES = 10
SEXTIC_FREE_BOUND = 4


@dataclass(frozen=True)
class PencilType:
    """Tipo numérico (n; m₁ ≥ m₂ ≥ ... ≥ m_k)."""

    degree: int
    mults: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.degree < 1:
            raise InvalidPencilType(f"El grado del pincel debe ser ≥ 1; es {self.degree}.")
        if any(m < 1 for m in self.mults):
            raise InvalidPencilType(f"Multiplicidades no positivas: {list(self.mults)}.")
        object.__setattr__(self, "mults", tuple(sorted((int(m) for m in self.mults), reverse=True)))

    def as_system(self, prefix: str = "p") -> LinSysData:
        return LinSysData.general(self.degree, self.mults, prefix=prefix)

    def as_dict(self) -> Dict:
        return {"n": self.degree, "mults": list(self.mults)}

    def __str__(self):
        counts = Counter(self.mults)
        parts = [f"{m}^{k}" if k > 1 else str(m) for m, k in sorted(counts.items(), reverse=True)]
        return f"({self.degree}; {','.join(parts)})"


# =========================
# ECUACIONES
# =========================

def rationality_residual(n: int, mults: Sequence[int]) -> int:
    return (n - 1) * (n - 2) // 2 - sum(m * (m - 1) // 2 for m in mults)


def pencil_residual(n: int, mults: Sequence[int]) -> int:
    return (n + 1) * (n + 2) // 2 - sum(m * (m + 1) // 2 for m in mults) - 2


def linear_residual(n: int, mults: Sequence[int]) -> int:
    return 3 * n - sum(mults) - 2


def _equation(residual: int, target: int) -> Dict:
    return {"value": residual + target, "target": target, "residual": residual, "holds": residual == 0}


def check_rational_pencil(n: int, mults: Sequence[int]) -> Dict:
    """
    Evalúa las dos ecuaciones y la que resulta de restarlas. El informe nunca
    lanza: los datos que no forman pincel salen con valid = False y los residuos.
    """
    mults = sorted(mults, reverse=True)
    eq1 = _equation(rationality_residual(n, mults), 0)
    eq2 = _equation(pencil_residual(n, mults), 2)
    eq3 = _equation(linear_residual(n, mults), 2)
    report = {"n": n, "mults": mults, "eq1": eq1, "eq2": eq2, "eq3": eq3}

    valid = eq1["holds"] and eq2["holds"]
    if valid and not eq3["holds"]:
        # eq3 = eq2 − eq1; sólo falla si la aritmética está rota
        logger.error(f"Pincel ({n}; {mults}) cumple (1) y (2) pero no 3n − Σm = 2")
        valid = False
    report["valid"] = valid
    if not valid:
        failing = [name for name in ("eq1", "eq2") if not report[name]["holds"]]
        report["detail"] = f"({n}; {mults}) no es un pincel de curvas racionales: fallan {', '.join(failing)}."
    return report


def pencil_cross_check(p: PencilType) -> Dict:
    """Lectura de p como sistema lineal: género 0, dimensión virtual 1 y autointersección 0."""
    L = p.as_system()
    return {
        "member_genus": member_genus(L),
        "virtual_dim": virtual_dim(L),
        "self_intersection": self_intersection(L),
    }


def require_pencil(p: PencilType):
    if rationality_residual(p.degree, p.mults) or pencil_residual(p.degree, p.mults):
        raise InvalidPencilType(f"{p} no cumple las ecuaciones de un pincel de curvas racionales.")


# =========================
# SÉXTICAS NODALES
# =========================

def sextic_free_intersection_bound(p: PencilType, assignment: Sequence[int]) -> int:
    """
    Puntos de intersección, fuera de los puntos base, entre una séxtica con
    sólo puntos dobles ordinarios y una curva general del pincel p, cuando p
    tiene multiplicidad nᵢ en el nodo i: 6n − 2·Σ nᵢ.
    """
    require_pencil(p)
    if any(n_i < 0 for n_i in assignment):
        raise InvalidParameters(f"Multiplicidades negativas en los nodos: {list(assignment)}.")
    if sum(assignment) > sum(p.mults):
        raise InvalidParameters(
            f"Σ nᵢ = {sum(assignment)} supera la suma de multiplicidades del pincel ({sum(p.mults)})."
        )
    bound = 6 * p.degree - 2 * sum(assignment)
    if bound < SEXTIC_FREE_BOUND:
        raise InvalidPencilType(f"Cota {bound} < {SEXTIC_FREE_BOUND} para {p}: 3n − Σm = 2 no se cumple.")
    return bound


def nodal_sextic_obstruction(nodes: int) -> Dict:
    """
    Una séxtica con `nodes` puntos dobles ordinarios corta a cualquier pincel
    de curvas racionales en al menos 4 puntos libres, mientras que una recta
    corta al pincel de rectas por un punto exterior en 1. Con 10 nodos
    (género 0) la séxtica es racional y sin embargo no es imagen de una recta.
    """
    if not 0 <= nodes <= SEXTIC_MAX_NODES:
        raise InconsistentCurveData(
            f"Una séxtica irreducible tiene entre 0 y {SEXTIC_MAX_NODES} nodos; se indicaron {nodes}."
        )
    genus = SEXTIC_MAX_NODES - nodes
    report = {
        "nodes": nodes,
        "genus": genus,
        "free_intersection_lower_bound": SEXTIC_FREE_BOUND,
        "line_free_intersection": 1,
    }
    if genus == 0:
        report["image_of_line"] = False
        report["conclusion"] = "Séxtica racional que no es transformada de Cremona de una recta."
    else:
        report["image_of_line"] = None
        report["conclusion"] = f"Género {genus}: la curva no es racional y la comparación con una recta no aplica."
    return report


def phi_image_degree(p: PencilType, base: Optional[Sequence[str]] = None) -> int:
    """
    Grado de la imagen del pincel por una involución cuadrática cuyos puntos
    base no son puntos base del pincel: 2n.
    """
    system = p.as_system()
    base = tuple(base or ("q1", "q2", "q3"))
    if set(base) & set(system.labels):
        raise InvalidParameters(f"Los puntos base {base} coinciden con puntos base del pincel.")
    return quadratic_transform(system, base).degree


# =========================
# ENUMERACIÓN
# =========================

def _partitions(total: int, squares: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """Sucesiones no crecientes de partes ≤ largest con Σ = total y Σ² = squares."""
    if total == 0:
        if squares == 0:
            yield ()
        return
    # con partes ≤ m, Σ² ≤ m·Σ y Σ² ≥ Σ
    if squares < total or squares > largest * total:
        return
    for m in range(min(largest, total), 0, -1):
        if m * m > squares:
            continue
        for rest in _partitions(total - m, squares - m * m, m):
            yield (m,) + rest


def enumerate_pencil_types(n_max: int, bound: Optional[int] = None) -> List[PencilType]:
    """
    Todos los tipos (n; m) con 1 ≤ n ≤ n_max y 1 ≤ mᵢ ≤ n que cumplen las dos
    ecuaciones. Orden: n creciente y, para cada n, multiplicidades en orden
    lexicográfico decreciente.
    """
    bound = settings.CREMONA_KIT_PENCIL_MAX if bound is None else bound
    if n_max > bound:
        raise EnumerationBoundExceeded(f"n_max = {n_max} supera la cota de enumeración {bound}.")
    if n_max < 1:
        raise InvalidParameters(f"n_max debe ser ≥ 1; es {n_max}.")

    # Σm = 3n − 2 y Σm² = n² equivalen a las dos ecuaciones
    types = [
        PencilType(n, mults)
        for n in range(1, n_max + 1)
        for mults in _partitions(3 * n - 2, n * n, n)
    ]
    logger.info(f"enumerate_pencil_types({n_max}): {len(types)} tipos")
    return types
