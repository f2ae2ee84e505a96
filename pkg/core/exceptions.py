"""
Excepciones del motor algebraico.

Todas derivan de ValidationError de Django: un dato que no cumple los invariantes
(polinomio nulo, curva de género negativo, sistema sin adjunto...) es un dato
inválido. Los comandos de gestión las traducen a código de salida 2.
"""

from django.core.exceptions import ValidationError


class CremonaKitError(ValidationError):
    """Error base de cremona_kit. Cada subclase fija su propio `code`."""

    default_code = "cremona_kit"

    def __init__(self, message, code=None, params=None):
        super().__init__(message, code=code or self.default_code, params=params)

    @property
    def detail(self) -> str:
        return "; ".join(self.messages)


# Aritmética exacta
class ZeroPolynomialError(CremonaKitError):
    default_code = "zero_polynomial"


class DegreeMismatch(CremonaKitError):
    default_code = "degree_mismatch"


class ZeroDenominator(CremonaKitError):
    default_code = "zero_denominator"


class SingularMatrix(CremonaKitError):
    default_code = "singular_matrix"


# Curvas planas
class NonOrdinarySingularity(CremonaKitError):
    default_code = "non_ordinary_singularity"


class InconsistentCurveData(CremonaKitError):
    default_code = "inconsistent_curve_data"


# Sistemas lineales
class AdjointDoesNotExist(CremonaKitError):
    default_code = "adjoint_does_not_exist"


class NegativeDegree(CremonaKitError):
    default_code = "negative_degree"


class NegativeMultiplicity(CremonaKitError):
    default_code = "negative_multiplicity"


class InconsistentSystem(CremonaKitError):
    default_code = "inconsistent_system"


# Transformaciones de Cremona
class InvalidParameters(CremonaKitError):
    default_code = "invalid_parameters"


class DegenerateComposition(CremonaKitError):
    default_code = "degenerate_composition"


class DegreeCapExceeded(CremonaKitError):
    default_code = "degree_cap_exceeded"


# Grupo de de Jonquières
class MismatchedModulus(CremonaKitError):
    default_code = "mismatched_h"


class InvalidJonqElement(CremonaKitError):
    default_code = "invalid_jonq_element"


# Lema del pincel
class InvalidPencilType(CremonaKitError):
    default_code = "invalid_pencil_type"


class EnumerationBoundExceeded(CremonaKitError):
    default_code = "enumeration_bound_exceeded"
