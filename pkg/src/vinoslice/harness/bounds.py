"""
Calculadora de exponentes y restricciones de parámetros.

Todas las magnitudes se calculan con racionales exactos; ningún flag se
asume, todos se evalúan.
"""

import math
from fractions import Fraction
from typing import Dict, Optional, Sequence

from ..models import BoundParams
from ..utils.logging import get_logger
from .errors import ParameterDomainError

logger = get_logger("harness.bounds")


def _check_domain(s: int, k: int, r: int, kappa: int) -> None:
    if s < 1:
        raise ParameterDomainError("s", s, f"Se requiere s >= 1 (s={s})")
    if r < 1:
        raise ParameterDomainError("r", r, f"Se requiere r >= 1 (r={r})")
    if k <= r:
        raise ParameterDomainError("k", k, f"Se requiere k > r (k={k}, r={r})")
    if kappa < 1:
        raise ParameterDomainError("kappa", kappa, f"Se requiere kappa >= 1 (kappa={kappa})")


def r1_range_bound(k: int) -> Fraction:
    """Rango ``(k^2 - 1) / 2`` de s en el caso r = 1."""
    return Fraction(k * k - 1, 2)


def r1_parity_bound(k: int) -> Fraction:
    """
    Cota de s para r = 1 con la elección óptima de kappa según la paridad de k.

    k = 2l+1 con kappa = l+1 da ``k(k+1)/2 - k/2``; k = 2l con kappa = l da
    ``k(k+1)/2 - (k+1)/2``.
    """
    half = Fraction(k * (k + 1), 2)
    if k % 2:
        return half - Fraction(k, 2)
    return half - Fraction(k + 1, 2)


def r1_parity_kappa(k: int) -> int:
    """kappa usado en cada rama de paridad."""
    return k // 2 + 1 if k % 2 else k // 2


def slice_s_range(k: int, r: int, kappa: int) -> Fraction:
    """Máximo s admitido: ``k(k+1)/2 - (k(k+1) - r(r-1)) / (4 kappa)``."""
    return Fraction(k * (k + 1), 2) - Fraction(k * (k + 1) - r * (r - 1), 4 * kappa)


def bound_calculator(
    s: int,
    k: int,
    r: int,
    kappa: int,
    t: Optional[int] = None,
    degrees: Optional[Sequence[int]] = None,
) -> BoundParams:
    """
    Exponentes objetivo y flags de validez para (s, k, r, kappa).

    Args:
        s: Pares por lado
        k: Grado máximo
        r: Grado omitido (1 <= r < k)
        kappa: Parámetro de interpolación (>= 1)
        t: Longitud de la tupla auxiliar (por defecto k - r + 1)
        degrees: Grados k_1 > ... > k_t de la tupla (por defecto los monomiales
            k-r, ..., 0 del sistema desplazado)

    Returns:
        BoundParams: u, v, w, Delta, exponentes y flags

    Raises:
        ParameterDomainError: Si algún parámetro está fuera de dominio
    """
    _check_domain(s, k, r, kappa)
    if degrees is not None:
        degrees = [int(d) for d in degrees]
        if t is not None and t != len(degrees):
            raise ParameterDomainError("t", t, f"t={t} no coincide con {len(degrees)} grados")
        if any(a <= b for a, b in zip(degrees, degrees[1:])) or any(d < 0 for d in degrees):
            raise ParameterDomainError("degrees", list(degrees))
        t = len(degrees)
    if t is None:
        t = k - r + 1
        degrees = list(range(k - r, -1, -1))
    if t < 1:
        raise ParameterDomainError("t", t)
    degree_sum = sum(degrees) if degrees is not None else None

    v = Fraction(r * (r - 1), 4 * kappa)
    w = (1 - Fraction(1, 2 * kappa)) * Fraction(k * (k + 1), 2)
    u = s - v
    delta = (r - 1) - Fraction(r - 1, 2 * kappa)
    s_max = slice_s_range(k, r, kappa)
    kappa_max = Fraction(k - r + 2, 2)
    conjectural = (k - r) * (k + r + 1) + 2

    targets: Dict[str, Fraction] = {
        "r1_range": r1_range_bound(k),
        "r1_parity_bound": r1_parity_bound(k),
        "s_max": s_max,
        "holder_s": Fraction(math.floor(v + w)),
        "slice_exponent": s + delta,
        "kappa_max": kappa_max,
        "kappa_conjectural": Fraction(conjectural // 4),
        "aux_exponent": Fraction(r * (2 * s - 1) + 1),
        "main_exponent": max(Fraction(s), 2 * s - Fraction(k * k + k - 2 * r, 2)),
        "easy_exponent": Fraction(2 * r * s),
        "triangle_exponent": Fraction(s + r),
        "u1_moment": u / w * k * (k + 1),
        "u1_exponent": u / w * k * (k + 1) / 2,
        "u2_exponent": Fraction(r * (r - 1), 2) + r * (2 * kappa - 1) + 1,
    }
    if degree_sum is not None:
        targets["aux_heuristic_exponent"] = Fraction(2 * s * (r + 1) - t * r - degree_sum)

    flags = {
        "r1_range_ok": r == 1 and k >= 3 and s <= targets["r1_range"],
        "s_range_ok": s <= s_max,
        "kappa_ok": kappa <= kappa_max,
        "conjectural_range_ok": 4 * s <= conjectural,
        "aux_bound_applies": t >= 2 * s - 1,
        "easy_bound_applies": t >= 2 * s,
        "w_ge_u": w >= u,
    }

    params = BoundParams(
        s=s,
        k=k,
        r=r,
        t=t,
        kappa=kappa,
        u=u,
        v=v,
        w=w,
        delta=delta,
        targets=targets,
        flags=flags,
    )
    logger.debug(f"Cotas (s={s}, k={k}, r={r}, kappa={kappa}): {flags}")
    return params
