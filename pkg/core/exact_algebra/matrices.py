from dataclasses import dataclass

from core.exceptions import SingularMatrix
from .polys import RatFunc


@dataclass(frozen=True)
class Mat2RF:
    """Matriz 2x2 invertible con entradas en Q(x)."""

    a11: RatFunc
    a12: RatFunc
    a21: RatFunc
    a22: RatFunc

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, RatFunc.of(getattr(self, name)))
        if self.det().is_zero:
            raise SingularMatrix("La matriz tiene determinante nulo.")

    @classmethod
    def identity(cls) -> "Mat2RF":
        return cls(RatFunc.of(1), RatFunc.of(0), RatFunc.of(0), RatFunc.of(1))

    def det(self) -> RatFunc:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> RatFunc:
        return self.a11 + self.a22

    def __mul__(self, other: "Mat2RF") -> "Mat2RF":
        return Mat2RF(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def inverse(self) -> "Mat2RF":
        d = self.det()
        return Mat2RF(self.a22 / d, -self.a12 / d, -self.a21 / d, self.a11 / d)

    def is_scalar(self) -> bool:
        """True si es múltiplo de la identidad (trivial en PGL2)."""
        return self.a12.is_zero and self.a21.is_zero and self.a11 == self.a22

    def rows(self):
        return ((self.a11, self.a12), (self.a21, self.a22))
