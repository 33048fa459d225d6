"""
Polinomios univariados con coeficientes enteros.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from sympy import Poly, Symbol
from sympy.polys.domains import ZZ

from ..algebra.multipoly import MultiPoly

_Z = Symbol("z")


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class UniPoly:
    """Polinomio ``c_0 + c_1 z + ... + c_k z^k`` (coeficientes ascendentes)."""

    coeffs: Tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "UniPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_sympy(cls, poly: Poly) -> "UniPoly":
        return cls(reversed([int(c) for c in poly.all_coeffs()]))

    @property
    def degree(self) -> int:
        """Grado; -1 para el polinomio cero."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, z: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * z + c
        return value

    def as_sympy(self) -> Poly:
        """Conversión a ``sympy.Poly`` en la variable ``z``."""
        return Poly(list(reversed(self.coeffs)) or [0], _Z, domain=ZZ)

    def derivative(self) -> "UniPoly":
        return UniPoly.from_sympy(self.as_sympy().diff(_Z))

    def shift(self, a: int) -> "UniPoly":
        """Polinomio ``z -> f(z + a)``."""
        return UniPoly.from_sympy(self.as_sympy().shift(a))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        return UniPoly.from_sympy(self.as_sympy() + other.as_sympy())

    def scale(self, factor: int) -> "UniPoly":
        return UniPoly([c * factor for c in self.coeffs])

    def to_multipoly(self, var: str, gens: Sequence[str]) -> MultiPoly:
        """Incrusta ``f(var)`` en un anillo multivariado."""
        gens = tuple(gens)
        pos = gens.index(var)
        terms = {}
        for e, c in enumerate(self.coeffs):
            if c:
                monom = [0] * len(gens)
                monom[pos] = e
                terms[tuple(monom)] = c
        return MultiPoly.from_terms(gens, terms)

    def to_text(self) -> str:
        """Formato de archivo de tupla: coeficientes ascendentes separados por comas."""
        return ",".join(str(c) for c in self.coeffs) or "0"

    def __str__(self) -> str:
        return str(self.as_sympy().as_expr())
