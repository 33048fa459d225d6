"""
Verificación simbólica de las dos identidades explícitas de niveles uno y dos.
"""

from typing import Tuple

from ..algebra.errors import NotDivisibleError
from ..algebra.multipoly import (
    MultiPoly,
    mp_divide_exact,
    vandermonde,
    w_gens,
    z_gens,
    zh_gens,
)
from ..systems.tuples import monomial_tuple
from ..utils.logging import get_logger
from .models import IdentityReport
from .psi import (
    DEGREE_SIX_PSI2,
    check_vanishing,
    expand_psi,
    extract_phi,
    phi_recombines,
    specialization_checks,
)

logger = get_logger("identities.builtin")


def _power_sum(gens: Tuple[str, ...], n: int, j: int) -> MultiPoly:
    """``s_j = sum_i h_i z_i^j``."""
    total = MultiPoly.zero(gens)
    for i in range(1, n + 1):
        h = MultiPoly.variable(gens, f"h{i}")
        total = total + h * MultiPoly.variable(gens, f"z{i}") ** j
    return total


def _first_identity() -> bool:
    gens = zh_gens(2)
    s = [_power_sum(gens, 2, j) for j in range(3)]
    lhs = s[0] * s[2] - s[1] ** 2
    z1, z2, h1, h2 = (MultiPoly.variable(gens, g) for g in gens)
    rhs = h1 * h2 * (z1 - z2) ** 2
    return (lhs - rhs).is_zero()


def _second_expansion() -> MultiPoly:
    gens = zh_gens(3)
    s0, s1, s2, s3, s4 = (_power_sum(gens, 3, j) for j in range(5))
    return (s1 * s4 - s2 * s3) ** 2 * (s0 * s2 - s1**2) - (s0 * s4 - s2**2) * (
        s1 * s3 - s2**2
    ) ** 2


def builtin_identities_check() -> IdentityReport:
    """
    Expande las dos identidades y extrae F_{6,3}.

    La primera, ``(h1+h2)(h1z1^2+h2z2^2) - (h1z1+h2z2)^2 = h1h2(z1-z2)^2``, se
    comprueba término a término. La segunda se divide por
    ``h1h2h3 (z1-z2)^2 (z2-z3)^2 (z3-z1)^2``.

    Returns:
        IdentityReport: Resultado con F_{6,3} y comprobaciones adicionales
    """
    first_ok = _first_identity()
    expansion = _second_expansion()
    gens = expansion.gens
    zs, hs = z_gens(3), z_gens(3, "h")
    v = vandermonde(zs, gens)
    h1, h2, h3 = (MultiPoly.variable(gens, h) for h in hs)
    divisor = h1 * h2 * h3 * v**2

    try:
        f63 = mp_divide_exact(expansion, divisor)
        divisible = True
    except NotDivisibleError:
        logger.error("La segunda identidad no es divisible por h1h2h3 * Vandermonde^2")
        f63 = MultiPoly.zero(gens)
        divisible = False

    # La combinación de grado seis como Psi_2 de la tupla (z^4, z^3, z^2, z, 1)
    f = monomial_tuple(5, 1)
    psi2 = MultiPoly.parse(DEGREE_SIX_PSI2, w_gens(5))
    checks = {
        "psi2_vanishes_at_level_2": check_vanishing(psi2, f, 2),
        "psi2_expansion_matches": expand_psi(psi2, f, 3) == expansion,
    }
    checks.update(specialization_checks(psi2, f, 2))
    if divisible:
        phi = extract_phi(psi2, f, 2)
        checks["phi2_recombines"] = phi_recombines(phi, psi2, f)
        checks["phi2_is_vandermonde_times_f63"] = phi.phi == v * f63

    report = IdentityReport(
        first_identity_ok=first_ok,
        second_identity_divisible=divisible,
        f63=f63,
        f63_bidegree=f63.bidegree(zs, hs),
    )
    report.checks.update(checks)
    logger.info(f"Identidades explícitas verificadas: ok={report.ok}")
    return report
