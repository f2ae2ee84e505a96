"""
Sistema adjunto y cadena de adjuntos sucesivos.

Cada paso toma (n; μ), forma el adjunto bruto (n−3; μ−1), resta las
componentes fijas y, si el resultado está compuesto con un pincel, se queda
con el pincel. La cadena se detiene cuando el miembro general tiene género
≤ 1 o el sistema queda vacío.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from core.exceptions import AdjointDoesNotExist
from core.curve_model.curves import PlaneCurveModel, genus
from .linsys import (
    LinSysData,
    member_genus,
    pencil_decompose,
    remove_fixed_components,
    virtual_dim,
)

logger = logging.getLogger(__name__)

RATIONAL_PENCIL = "RationalPencil"
ELLIPTIC_PENCIL = "EllipticPencil"
ELLIPTIC_NET = "EllipticNet"
RATIONAL_SYSTEM = "RationalSystem"
EXHAUSTED = "Exhausted"

CLASSIFICATIONS = (RATIONAL_PENCIL, ELLIPTIC_PENCIL, ELLIPTIC_NET, RATIONAL_SYSTEM, EXHAUSTED)

# Tipo de involución asociada a cada clase terminal
INVOLUTION_TYPES = {
    RATIONAL_PENCIL: "de Jonquières",
    ELLIPTIC_NET: "Geiser",
    ELLIPTIC_PENCIL: "Bertini",
    RATIONAL_SYSTEM: None,
    EXHAUSTED: None,
}


def curve_system(c: PlaneCurveModel) -> LinSysData:
    """La curva leída como sistema (d; m₁, ..., m_k) sobre sus etiquetas."""
    return LinSysData(c.degree, {s.label: s.multiplicity for s in c.singularities})


def _raw(L: LinSysData) -> LinSysData:
    return LinSysData(L.degree - 3, {label: max(m - 1, 0) for label, m in L.mults})


def adjoint_raw(c: PlaneCurveModel) -> LinSysData:
    """Curvas de grado d−3 con multiplicidad mᵢ−1 en cada punto singular."""
    g = genus(c)
    if g <= 1:
        raise AdjointDoesNotExist(f"La curva tiene género {g}; el adjunto sólo existe si el género es > 1.")
    return _raw(curve_system(c))


@dataclass(frozen=True)
class ChainStep:
    input: LinSysData
    raw_adjoint: LinSysData
    reduced: LinSysData
    removed_fixed: Tuple[Dict, ...] = ()
    pencil_reduction: Optional[Tuple[int, LinSysData]] = None
    warnings: Tuple[str, ...] = ()

    @property
    def output(self) -> LinSysData:
        if self.pencil_reduction is not None:
            return self.pencil_reduction[1]
        return self.reduced

    def as_dict(self) -> Dict:
        pencil = None
        if self.pencil_reduction is not None:
            content, primitive = self.pencil_reduction
            pencil = {"content": content, "pencil": primitive.as_dict()}
        return {
            "input": self.input.as_dict(),
            "raw": self.raw_adjoint.as_dict(),
            "removed": list(self.removed_fixed),
            "reduced": self.reduced.as_dict(),
            "pencil": pencil,
            "output": self.output.as_dict(),
            "warnings": list(self.warnings),
        }


def adjoint_step(L: LinSysData) -> ChainStep:
    g = member_genus(L)
    if g <= 1:
        raise AdjointDoesNotExist(f"El miembro general de {L} tiene género {g}; no hay adjunto.")

    raw = _raw(L)
    reduced, removed = remove_fixed_components(raw)
    warnings = []
    if virtual_dim(reduced) != virtual_dim(raw):
        message = (
            f"Adjunto de {L} superabundante: dimensión virtual {virtual_dim(raw)} antes de quitar "
            f"componentes fijas y {virtual_dim(reduced)} después."
        )
        logger.warning(message)
        warnings.append(message)

    step = ChainStep(L, raw, reduced, tuple(removed), pencil_decompose(reduced), tuple(warnings))
    logger.debug(f"Paso adjunto {L} -> {step.output}")
    return step


def classify_terminal(L: LinSysData) -> Tuple[str, List[str]]:
    """Clase del sistema terminal según género del miembro general y dimensión."""
    dim, g = virtual_dim(L), member_genus(L)
    if dim <= 0:
        return EXHAUSTED, []
    if g == 0 and dim == 1:
        return RATIONAL_PENCIL, []
    if g == 0:
        return RATIONAL_SYSTEM, []
    if g == 1 and dim == 1:
        return ELLIPTIC_PENCIL, []
    if g == 1 and dim == 2:
        return ELLIPTIC_NET, []
    message = f"Sistema terminal {L} de género {g} y dimensión {dim} fuera de los casos esperados."
    logger.warning(message)
    return EXHAUSTED, [message]


@dataclass(frozen=True)
class ChainReport:
    steps: Tuple[ChainStep, ...]
    terminal: LinSysData
    classification: str
    warnings: Tuple[str, ...] = field(default=())

    @property
    def involution_type(self) -> Optional[str]:
        return INVOLUTION_TYPES[self.classification]

    def as_dict(self) -> Dict:
        return {
            "steps": [s.as_dict() for s in self.steps],
            "terminal": self.terminal.as_dict(),
            "class": self.classification,
            "genus": member_genus(self.terminal),
            "dim": virtual_dim(self.terminal),
            "warnings": list(self.warnings),
        }


def adjoint_chain(c: PlaneCurveModel) -> ChainReport:
    g = genus(c)
    if g <= 1:
        raise AdjointDoesNotExist(f"La curva tiene género {g}; la cadena de adjuntos requiere género > 1.")

    current = curve_system(c)
    steps: List[ChainStep] = []
    warnings: List[str] = []
    while True:
        step = adjoint_step(current)
        steps.append(step)
        warnings.extend(step.warnings)
        current = step.output
        if virtual_dim(current) <= 0:
            classification = EXHAUSTED
            message = f"La cadena se vació en {current} (dimensión virtual {virtual_dim(current)})."
            logger.warning(message)
            warnings.append(message)
            break
        if member_genus(current) <= 1:
            classification, extra = classify_terminal(current)
            warnings.extend(extra)
            break

    logger.info(f"Cadena de adjuntos de grado {c.degree}: {len(steps)} pasos, terminal {current}, {classification}")
    return ChainReport(tuple(steps), current, classification, tuple(warnings))
