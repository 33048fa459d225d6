"""
Combinaciones de desplazamientos ``F(z) = sum_i h_i f(z + a_i)``.
"""

import math
from typing import Sequence

from ..systems.unipoly import UniPoly
from ..utils.logging import get_logger
from .errors import (
    CertificationError,
    RepeatedShiftError,
    ShiftParameterError,
    ZeroHVectorError,
)

logger = get_logger("identities.shift")


def shift_coefficients(f: UniPoly, h: Sequence[int], a: Sequence[int]) -> UniPoly:
    """``d_i = sum_{j>=i} c_j binom(j, i) sum_l h_l a_l^(j-i)``."""
    k = f.degree
    d = []
    for i in range(k + 1):
        total = 0
        for j in range(i, k + 1):
            c = f.coeffs[j]
            if c:
                total += c * math.comb(j, i) * sum(hl * al ** (j - i) for hl, al in zip(h, a))
        d.append(total)
    return UniPoly(d)


def shift_direct(f: UniPoly, h: Sequence[int], a: Sequence[int]) -> UniPoly:
    """La misma combinación, desplazando y sumando cada término."""
    result = UniPoly([])
    for hl, al in zip(h, a):
        result = result + f.shift(al).scale(hl)
    return result


def shift_poly_coeffs(f: UniPoly, h: Sequence[int], a: Sequence[int]) -> UniPoly:
    """
    Calcula ``F(z) = sum_i h_i f(z + a_i)`` por la fórmula de coeficientes y
    lo contrasta con la expansión directa.

    Args:
        f: Polinomio de grado k >= 1
        h: Vector no nulo de longitud u, 1 <= u <= k
        a: Desplazamientos distintos, de la misma longitud

    Returns:
        UniPoly: F, que nunca es constante

    Raises:
        ZeroHVectorError: Si h es nulo
        RepeatedShiftError: Si algún a_i se repite
        ShiftParameterError: Si las longitudes no cuadran o u > k
        CertificationError: Si ambas vías discrepan o F es constante
    """
    if len(h) != len(a):
        raise ShiftParameterError(f"h y a tienen longitudes distintas ({len(h)} y {len(a)})")
    if not any(h):
        raise ZeroHVectorError("El vector h es nulo")
    if len(set(a)) != len(a):
        raise RepeatedShiftError(a)
    u, k = len(h), f.degree
    if not 1 <= u <= k:
        raise ShiftParameterError(f"Se requiere 1 <= u <= k (u={u}, k={k})")

    formula = shift_coefficients(f, h, a)
    direct = shift_direct(f, h, a)
    if formula != direct:
        logger.error(f"Desplazamiento inconsistente: {formula} frente a {direct}")
        raise CertificationError(f"Fórmula {formula} y expansión directa {direct} difieren")
    if formula.degree < 1:
        raise CertificationError(f"La combinación desplazada es constante: {formula}")
    return formula
