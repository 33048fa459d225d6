"""
Conteo de raíces enteras de polinomios en (z, h) dentro de una caja.
"""

from typing import Dict, List, NamedTuple, Sequence

import numpy as np

from ..algebra.errors import ArityMismatchError
from ..algebra.multipoly import MultiPoly
from ..utils.logging import get_logger
from .errors import ClassificationError, ZeroPolynomialError
from .tsets import CoefficientSets

logger = get_logger("classification.roots")


class BoundCheck(NamedTuple):
    """Conteo exacto frente a su cota."""

    count: int
    bound: int
    ok: bool


def _h_coefficients(psi: MultiPoly) -> Dict[int, MultiPoly]:
    """Coeficientes de cada potencia de h (segunda variable) como polinomios en z."""
    h_name = psi.gens[1]
    return {exps[0]: coeff for exps, coeff in psi.coefficients_in([h_name]).items()}


def _root_mask(psi: MultiPoly, z: int, hs: np.ndarray) -> np.ndarray:
    """Máscara de los h con ``psi(z, h) == 0``, evaluada por Horner en enteros exactos."""
    if psi.is_zero():
        return np.ones(hs.size, dtype=bool)
    coeffs = _h_coefficients(psi)
    degree = max(coeffs)
    values = np.zeros(hs.size, dtype=object)
    for e in range(degree, -1, -1):
        c = coeffs[e].evaluate([z]) if e in coeffs else 0
        values = values * hs + c
    return values == 0


def _count_roots(polys: List[MultiPoly], z_values: Sequence[int], H: int) -> int:
    hs = np.arange(-H, H + 1, dtype=object)
    count = 0
    for z in z_values:
        mask = np.ones(hs.size, dtype=bool)
        for psi in polys:
            mask &= _root_mask(psi, z, hs)
            if not mask.any():
                break
        count += int(np.count_nonzero(mask))
    return count


def root_pair_bound(psi: MultiPoly, X: int, r: int) -> BoundCheck:
    """
    Cuenta las raíces de ``psi(z, h) = 0`` con |z| <= X y |h| <= X^r.

    Args:
        psi: Polinomio no nulo en dos variables (z, h), en ese orden
        X: Cota de |z|
        r: Exponente de la cota de |h|

    Returns:
        BoundCheck: Conteo, cota ``2d(2X^r + 1)`` con d el grado total, y si se cumple
    """
    if psi.nvars != 2:
        raise ArityMismatchError(2, psi.nvars, "variables")
    if psi.is_zero():
        raise ZeroPolynomialError("El polinomio es idénticamente cero")
    H = X**r
    d = psi.total_degree()
    count = _count_roots([psi], range(-X, X + 1), H)
    bound = 2 * d * (2 * H + 1)
    logger.debug(f"Raíces de {psi} en la caja (X={X}, r={r}): {count} <= {bound}")
    return BoundCheck(count=count, bound=bound, ok=count <= bound)


lemma41_bound_check = root_pair_bound

def layer_root_count(
    tsets: CoefficientSets,
    m: int,
    z_fixed: Sequence[int],
    h_fixed: Sequence[int],
    X: int,
    r: int,
) -> BoundCheck:
    """
    Cuenta los ``(z_{m+1}, h_{m+1})`` en ``[1, X] x [-X^r, X^r]`` que anulan todo
    T_{n,m+1} con el prefijo fijado.

    Args:
        tsets: Jerarquía T_{n,*}
        m: Longitud del prefijo (0 <= m <= n)
        z_fixed: z_1..z_m
        h_fixed: h_1..h_m
        X: Caja de z
        r: Exponente de la cota de h

    Returns:
        BoundCheck: Conteo y cota ``6 d X^r`` (d: grado total máximo de T_{n,m+1})

    Raises:
        ClassificationError: Si ningún elemento de T_{n,m} es no nulo en el prefijo
    """
    if not 0 <= m <= tsets.n:
        raise ClassificationError(f"Se requiere 0 <= m <= {tsets.n} (m={m})")
    if len(z_fixed) != m or len(h_fixed) != m:
        raise ArityMismatchError(m, len(z_fixed), "valores fijados")
    prefix = list(z_fixed) + list(h_fixed)
    if not any(phi.evaluate(prefix) for phi in tsets[m]):
        raise ClassificationError(f"Todos los elementos de T_{{{tsets.n},{m}}} se anulan")

    fixed = {f"z{i + 1}": z for i, z in enumerate(z_fixed)}
    fixed.update({f"h{i + 1}": h for i, h in enumerate(h_fixed)})
    polys = [psi.specialize(fixed) for psi in tsets[m + 1]]
    H = X**r
    count = _count_roots(polys, range(1, X + 1), H)
    bound = 6 * tsets.max_degree(m + 1) * H
    return BoundCheck(count=count, bound=bound, ok=count <= bound)
