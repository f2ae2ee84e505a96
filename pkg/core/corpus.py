"""
Corpus de ejemplos resueltos: cada entrada reproduce un caso clásico con los
motores de cremona_kit y compara el resultado exacto con el esperado.

El comando `examples` lo ejecuta y sale con código distinto de cero si alguna
entrada falla.
"""

import json
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from django.conf import settings

from core.exceptions import CremonaKitError
from core.exact_algebra.polys import TriHomPoly, uni_poly
from core.curve_model.curves import PlaneCurveModel, genus
from core.linsys_adjoint.chain import (
    ELLIPTIC_NET,
    ELLIPTIC_PENCIL,
    RATIONAL_PENCIL,
    RATIONAL_SYSTEM,
    adjoint_chain,
    adjoint_step,
)
from core.linsys_adjoint.linsys import LinSysData, quadratic_transform, systems_equivalent
from core.cremona_maps.maps import (
    compose,
    fixes_curve_pointwise,
    is_identity,
    make_H_element,
    make_linear_G,
    make_phi,
)
from core.jonquieres.jonq import (
    INFINITE,
    element_order,
    fixes_hyperelliptic,
    hyperelliptic_curve,
    sample_element,
    to_cremona,
)
from core.pencil_lemma.pencil import enumerate_pencil_types, nodal_sextic_obstruction, sextic_free_intersection_bound

logger = logging.getLogger(__name__)

CITATIONS_FILE = Path(__file__).resolve().parent / "fixtures" / "corpus_citas.json"


@lru_cache(maxsize=None)
def load_citations() -> Dict[str, str]:
    """Cita del ejemplo resuelto que reproduce cada entrada, por nombre."""
    with open(CITATIONS_FILE, encoding="utf-8") as handle:
        return json.load(handle)


Check = Callable[[random.Random], Tuple[bool, Dict[str, Any]]]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    reference: str
    check: Check

    @property
    def citation(self) -> str:
        return load_citations()[self.name]


@dataclass(frozen=True)
class CorpusResult:
    name: str
    reference: str
    citation: str
    passed: bool
    observed: Dict[str, Any]
    error: Optional[str] = None

    def as_dict(self) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "citation": self.citation,
            "reference": self.reference,
            "passed": self.passed,
            "observed": self.observed,
        }
        if self.error:
            data["error"] = self.error
        return data


# =========================
# CADENAS DE ADJUNTOS
# =========================

def _chain_outputs(degree: int, mults: Sequence[int]):
    report = adjoint_chain(PlaneCurveModel.general(degree, mults))
    return report, [str(s.output) for s in report.steps]


def check_hyperelliptic(rng):
    observed = {}
    passed = True
    for g in range(2, 7):
        report, outputs = _chain_outputs(g + 2, [g])
        raw = report.steps[0].raw_adjoint
        observed[f"g={g}"] = {"raw": str(raw), "terminal": str(report.terminal), "class": report.classification}
        passed &= (
            raw == report.terminal.scaled(g - 1)
            and report.terminal == LinSysData(1, {"p1": 1})
            and report.classification == RATIONAL_PENCIL
        )
    return passed, observed


def check_two_triple_points(rng):
    report, outputs = _chain_outputs(6, [3, 3])
    removed = report.steps[0].removed_fixed
    observed = {"outputs": outputs, "removed": list(removed), "class": report.classification}
    passed = (
        report.terminal == LinSysData.general(2, [1, 1])
        and [r["kind"] for r in removed] == ["line"]
        and report.classification == RATIONAL_SYSTEM
    )
    return passed, observed


def check_geiser(rng):
    report, outputs = _chain_outputs(6, [2] * 7)
    summary = report.as_dict()
    observed = {"outputs": outputs, "class": report.classification, "genus": summary["genus"], "dim": summary["dim"]}
    passed = (
        outputs == [str(LinSysData.general(3, [1] * 7))]
        and report.classification == ELLIPTIC_NET
        and (summary["genus"], summary["dim"]) == (1, 2)
    )
    return passed, observed


def check_bertini(rng):
    report, outputs = _chain_outputs(9, [3] * 8)
    observed = {"outputs": outputs, "class": report.classification}
    passed = (
        [s.output for s in report.steps] == [LinSysData.general(6, [2] * 8), LinSysData.general(3, [1] * 8)]
        and report.classification == ELLIPTIC_PENCIL
    )
    return passed, observed


def check_geiser_genus(rng):
    g = genus(PlaneCurveModel.general(6, [2] * 7))
    return g == 3, {"genus": g}


def check_covariance(rng):
    L = LinSysData.general(6, [2] * 7)
    mismatches = []
    for base in combinations(L.labels, 3):
        left = adjoint_step(quadratic_transform(L, base)).output
        right = quadratic_transform(adjoint_step(L).output, base)
        if not systems_equivalent(left, right):
            mismatches.append(list(base))
    return not mismatches, {"triples": 35, "mismatches": mismatches}


# =========================
# TRANSFORMACIONES DE CREMONA
# =========================

def check_involutions(rng):
    line = TriHomPoly.coordinate(0)
    observed = []
    passed = True
    for _ in range(5):
        mu, nu = rng.randint(-5, 5), rng.randint(1, 5)
        phi = make_phi(mu, nu)
        ok = is_identity(compose(phi, phi)) and fixes_curve_pointwise(phi, line)
        observed.append({"mu": mu, "nu": nu, "ok": ok})
        passed &= ok
    return passed, {"pairs": observed}


def check_not_abelian(rng):
    G, H = make_linear_G(2, 1, 0), make_H_element(1, 1)
    commute = compose(G, H) == compose(H, G)
    return not commute, {"G": str(G), "H": str(H), "commute": commute}


# =========================
# DE JONQUIÈRES
# =========================

def check_hyperelliptic_torus(rng):
    h = uni_poly([1, 1, 0, 0, 0, 0, 1])
    curve = hyperelliptic_curve(h)
    orders = []
    not_fixed = []
    passed = True
    for index in range(20):
        u = sample_element(h, rng, max_degree=1)
        order = element_order(u)
        orders.append(order)
        fixed = fixes_hyperelliptic(u) and fixes_curve_pointwise(to_cremona(u), curve)
        if not fixed:
            not_fixed.append(index)
        passed &= fixed and order in (1, 2, INFINITE)
    return passed, {"h": str(h.as_expr()), "curve": str(curve), "orders": orders, "not_fixed": not_fixed}


# =========================
# PINCELES RACIONALES
# =========================

def check_pencil_lemma(rng):
    types = enumerate_pencil_types(6)
    minimum = min(
        sextic_free_intersection_bound(p, chosen)
        for p in types
        for size in range(min(len(p.mults), 10) + 1)
        for chosen in set(combinations(p.mults, size))
    )
    lines_at_node = sextic_free_intersection_bound(types[0], [1])
    observed = {"types": len(types), "minimum": minimum, "lines_at_node": lines_at_node}
    return minimum == 4 and lines_at_node == 4, observed


def check_rational_sextic(rng):
    report = nodal_sextic_obstruction(10)
    return report["image_of_line"] is False, report


CORPUS: List[CorpusEntry] = [
    CorpusEntry("hiperelipticas", "Curvas hiperelípticas (g+2; g): pincel de rectas por el punto singular", check_hyperelliptic),
    CorpusEntry("sextica_dos_triples", "Séxtica con dos puntos triples: se quita la recta pq, cónicas por p y q", check_two_triple_points),
    CorpusEntry("geiser", "Séxtica con 7 nodos: red de cúbicas por 7 puntos", check_geiser),
    CorpusEntry("bertini", "Nónica con 8 puntos triples: dos adjuntos hasta el pincel de cúbicas", check_bertini),
    CorpusEntry("genero_geiser", "Género de la séxtica con 7 nodos", check_geiser_genus),
    CorpusEntry("covarianza_geiser", "Adjunto y transformación cuadrática conmutan", check_covariance),
    CorpusEntry("involuciones_phi", "Involuciones cuadráticas que fijan la recta x = 0", check_involutions),
    CorpusEntry("no_abeliano", "Las familias G y H no conmutan", check_not_abelian),
    CorpusEntry("toro_hiperelliptico", "Elementos de J_h: fijan y² = h y tienen orden 1, 2 o infinito", check_hyperelliptic_torus),
    CorpusEntry("pinceles_racionales", "Cota de 4 puntos libres entre una séxtica nodal y un pincel racional", check_pencil_lemma),
    CorpusEntry("sextica_racional", "Séxtica con 10 nodos que no es imagen de una recta", check_rational_sextic),
]


def run_entry(entry: CorpusEntry, rng: random.Random) -> CorpusResult:
    try:
        passed, observed = entry.check(rng)
    except CremonaKitError as exc:
        logger.warning(f"Entrada {entry.name}: {exc.code}: {exc.detail}")
        return CorpusResult(entry.name, entry.reference, entry.citation, False, {}, error=f"{exc.code}: {exc.detail}")
    if not passed:
        logger.warning(f"Entrada {entry.name} no reproduce el resultado esperado: {observed}")
    return CorpusResult(entry.name, entry.reference, entry.citation, bool(passed), observed)


def examples_corpus(seed: Optional[int] = None, only: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    """Ejecuta el corpus (o las entradas de `only`) con un generador sembrado por entrada."""
    seed = settings.CREMONA_KIT_SEED if seed is None else seed
    entries = [e for e in CORPUS if not only or e.name in only]
    results = [run_entry(entry, random.Random(f"{seed}:{entry.name}")) for entry in entries]
    failed = [r.name for r in results if not r.passed]
    logger.info(f"Corpus: {len(results) - len(failed)}/{len(results)} entradas correctas (semilla {seed})")
    report = {
        "seed": seed,
        "entries": [r.as_dict() for r in results],
        "passed": len(results) - len(failed),
        "failed": failed,
        "valid": not failed,
    }
    if failed:
        report["detail"] = f"Fallan {len(failed)} entradas: {', '.join(failed)}."
    return report
