"""
Álgebra exacta: polinomios multivariados y búsqueda de dependencias.
"""

from .dependency import DependencyResult, linear_dependency, search_kernel
from .errors import (
    AlgebraError,
    ArityMismatchError,
    NotDivisibleError,
    PolynomialDivisionByZeroError,
    PolynomialParseError,
    UncertifiedKernelError,
    VariableOrderMismatchError,
)
from .multipoly import (
    MultiPoly,
    mp_divide_exact,
    mp_eval,
    mp_mul,
    mp_product,
    poly_ring,
    vandermonde,
    w_gens,
    z_gens,
    zh_gens,
)

__all__ = [
    "UncertifiedKernelError",
    "MultiPoly",
    "mp_mul",
    "mp_divide_exact",
    "mp_eval",
    "mp_product",
    "vandermonde",
    "poly_ring",
    "w_gens",
    "z_gens",
    "zh_gens",
    "DependencyResult",
    "linear_dependency",
    "search_kernel",
    "AlgebraError",
    "ArityMismatchError",
    "NotDivisibleError",
    "PolynomialDivisionByZeroError",
    "PolynomialParseError",
    "VariableOrderMismatchError",
]
