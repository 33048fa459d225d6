"""
Polinomios Psi_n: dependencia algebraica entre las formas sigma_{j,n}.

Las formas ``sigma_{1,n}, ..., sigma_{2n+1,n}`` dependen de 2n variables, así
que existe ``Psi_n`` no nulo que se anula al sustituirlas. Como todas son
lineales en h, una relación se separa en componentes homogéneas en w y basta
buscar por grado homogéneo creciente.
"""

import time
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from ..algebra.dependency import search_kernel
from ..algebra.errors import ArityMismatchError, NotDivisibleError, UncertifiedKernelError
from ..algebra.multipoly import (
    Monomial,
    MultiPoly,
    mp_divide_exact,
    mp_product,
    vandermonde,
    w_gens,
    z_gens,
    zh_gens,
)
from ..systems.tuples import WellConditionedTuple, sigma_forms
from ..utils.logging import get_logger
from .cache import PsiCache
from .errors import (
    CertificationError,
    LevelNotSupportedError,
    PsiNotFoundError,
    TupleLengthError,
)
from .models import PhiResult, PsiResult

logger = get_logger("identities.psi")

DEFAULT_CAPS: Dict[int, int] = {1: 8, 2: 10, 3: 12}
MAX_LEVEL = 3

# Rango de los puntos de evaluación de la búsqueda
POINT_RANGE = 64

# Combinación de grado seis en w_1..w_5 para la tupla (z^4, z^3, z^2, z, 1)
DEGREE_SIX_PSI2 = (
    "(w4*w1 - w3*w2)^2*(w5*w3 - w4^2) - (w5*w1 - w3^2)*(w4*w2 - w3^2)^2"
)


def w_monomials(count: int, degree: int) -> List[Monomial]:
    """
    Exponentes de los w-monomios de grado exacto ``degree``.

    Returns:
        List[Monomial]: En orden grlex decreciente
    """
    monomials = []
    for combo in combinations_with_replacement(range(count), degree):
        exps = [0] * count
        for i in combo:
            exps[i] += 1
        monomials.append(tuple(exps))
    monomials.sort(reverse=True)
    return monomials


def _check_level(n: int, allow_high_level: bool) -> None:
    if n < 0:
        raise LevelNotSupportedError(n, f"Nivel negativo: {n}")
    if n > MAX_LEVEL:
        raise LevelNotSupportedError(n, f"Psi_{n} queda fuera del alcance (n <= {MAX_LEVEL})")
    if n == MAX_LEVEL and not allow_high_level:
        raise LevelNotSupportedError(
            n, f"Psi_{n} requiere activar explícitamente los niveles altos"
        )


def _check_arity(psi: MultiPoly, f: WellConditionedTuple, n: int) -> None:
    if psi.nvars != 2 * n + 1:
        raise ArityMismatchError(2 * n + 1, psi.nvars, "variables de Psi")
    if f.t < 2 * n + 1:
        raise TupleLengthError(f.t, 2 * n + 1)


def expand_psi(psi: MultiPoly, f: WellConditionedTuple, level: int) -> MultiPoly:
    """
    Sustituye ``w_j -> sigma_{j,level}`` y expande.

    Args:
        psi: Polinomio en 2n+1 variables (en su orden declarado)
        f: Tupla con al menos tantos polinomios como variables de psi
        level: Número de pares (z_i, h_i) de la sustitución

    Returns:
        MultiPoly: Polinomio en ``(z_1..z_level, h_1..h_level)``
    """
    forms = sigma_forms(f, psi.nvars, level)
    substitution = dict(zip(psi.gens, forms))
    return psi.compose(substitution, zh_gens(level))


def check_vanishing(psi: MultiPoly, f: WellConditionedTuple, n: int) -> bool:
    """True si ``psi(sigma_{1,n}, ..., sigma_{2n+1,n})`` es idénticamente cero."""
    _check_arity(psi, f, n)
    if n == 0:
        # Sin variables las formas valen cero
        return psi.constant_term() == 0
    return expand_psi(psi, f, n).is_zero()


def check_nonvanishing(psi: MultiPoly, f: WellConditionedTuple, n: int) -> bool:
    """True si la sustitución de nivel n+1 no es el polinomio cero."""
    _check_arity(psi, f, n)
    return not expand_psi(psi, f, n + 1).is_zero()


def specialization_checks(
    psi: MultiPoly, f: WellConditionedTuple, n: int
) -> Dict[str, bool]:
    """
    Comprueba que la expansión de nivel n+1 se anula con ``h_{n+1} = 0`` y con
    ``z_{n+1} = z_n``.

    Returns:
        Dict[str, bool]: ``h_last_zero`` y ``z_merge``
    """
    _check_arity(psi, f, n)
    expansion = expand_psi(psi, f, n + 1)
    gens = expansion.gens
    checks = {"h_last_zero": expansion.specialize({f"h{n + 1}": 0}).is_zero()}
    if n >= 1:
        merged = expansion.compose(
            {f"z{n + 1}": MultiPoly.variable(gens, f"z{n}")}, gens
        )
        checks["z_merge"] = merged.is_zero()
    return checks


def _psi_from_vector(
    gens: Tuple[str, ...], monomials: List[Monomial], vector: Tuple[int, ...]
) -> MultiPoly:
    return MultiPoly.from_terms(gens, {m: c for m, c in zip(monomials, vector) if c})


def _from_cache(
    cache: PsiCache, f: WellConditionedTuple, n: int, cap: int
) -> Optional[PsiResult]:
    text = cache.get(f.descriptor(), n, cap)
    if text is None:
        return None
    psi = MultiPoly.parse(text, w_gens(2 * n + 1))
    if check_vanishing(psi, f, n) and check_nonvanishing(psi, f, n):
        logger.debug(f"Psi_{n} recuperado de la caché")
        return PsiResult(psi=psi, n=n, total_degree=psi.total_degree(), certified=True)
    logger.warning(f"Entrada de caché para Psi_{n} no certificada; se descarta")
    cache.invalidate(f.descriptor(), n, cap)
    return None


def find_psi(
    f: WellConditionedTuple,
    n: int,
    degree_cap: Optional[int] = None,
    seed: int = 0,
    cache: Optional[PsiCache] = None,
    allow_high_level: bool = False,
) -> PsiResult:
    """
    Busca un Psi_n de grado mínimo, primitivo y con coeficiente principal positivo.

    Args:
        f: Tupla de longitud exactamente 2n+1
        n: Nivel
        degree_cap: Grado máximo explorado (por defecto según el nivel)
        seed: Semilla de los puntos de evaluación
        cache: Caché opcional de polinomios certificados
        allow_high_level: Permite n = 3

    Returns:
        PsiResult: Polinomio certificado

    Raises:
        TupleLengthError: Si t != 2n+1
        LevelNotSupportedError: Si n está fuera del alcance
        PsiNotFoundError: Si no hay dependencia hasta ``degree_cap``
    """
    if f.t != 2 * n + 1:
        raise TupleLengthError(f.t, 2 * n + 1)
    _check_level(n, allow_high_level)
    gens = w_gens(2 * n + 1)

    if n == 0:
        psi = MultiPoly.variable(gens, "w1")
        return PsiResult(psi=psi, n=0, total_degree=1, certified=True)

    cap = DEFAULT_CAPS[n] if degree_cap is None else degree_cap
    if cache is not None:
        cached = _from_cache(cache, f, n, cap)
        if cached is not None:
            return cached

    start = time.time()
    logger.info(f"Buscando Psi_{n} para la tupla de grados {f.degrees} (grado <= {cap})")
    polys = f.polys
    skipped: List[int] = []

    for degree in range(1, cap + 1):
        monomials = w_monomials(2 * n + 1, degree)
        logger.debug(f"Grado {degree}: {len(monomials)} w-monomios")

        def sample_row(rng: np.random.Generator) -> List[int]:
            zs = [int(v) for v in rng.integers(1, POINT_RANGE + 1, size=n)]
            hs = [int(v) for v in rng.integers(-POINT_RANGE, POINT_RANGE + 1, size=n)]
            w = [sum(h * p(z) for z, h in zip(zs, hs)) for p in polys]
            row = []
            for exps in monomials:
                value = 1
                for wj, e in zip(w, exps):
                    if e:
                        value *= wj**e
                row.append(value)
            return row

        def certify(vector: Tuple[int, ...]) -> bool:
            return check_vanishing(_psi_from_vector(gens, monomials, vector), f, n)

        try:
            vector = search_kernel(sample_row, len(monomials), certify, seed=seed + degree)
        except UncertifiedKernelError as e:
            logger.warning(f"Grado {degree} omitido en la búsqueda de Psi_{n}: {e}")
            skipped.append(degree)
            continue
        if vector is None:
            continue

        psi = _psi_from_vector(gens, monomials, vector)
        if not check_nonvanishing(psi, f, n):
            raise CertificationError(
                f"Psi_{n} de grado {degree} se anula también en el nivel {n + 1}"
            )
        elapsed = time.time() - start
        logger.info(f"Psi_{n} de grado {degree} encontrado ({elapsed:.2f}s): {psi}")
        minimal = not skipped
        if cache is not None and minimal:
            cache.set(f.descriptor(), n, cap, psi.to_text(), degree)
        return PsiResult(
            psi=psi, n=n, total_degree=degree, certified=True, minimal=minimal
        )

    raise PsiNotFoundError(n, cap)


def _phi_divisor(n: int) -> MultiPoly:
    gens = zh_gens(n + 1)
    h_product = mp_product(
        (MultiPoly.variable(gens, h) for h in z_gens(n + 1, "h")), gens
    )
    return h_product * vandermonde(z_gens(n + 1), gens)


def extract_phi(
    psi: Union[PsiResult, MultiPoly], f: WellConditionedTuple, n: int
) -> PhiResult:
    """
    Cofactor Phi_n: la expansión de nivel n+1 dividida por
    ``h_1...h_{n+1} * prod_{i<j} (z_i - z_j)``.

    Raises:
        NotDivisibleError: Si la división no es exacta (psi no certificado)
        CertificationError: Si el cociente es cero
    """
    poly = psi.psi if isinstance(psi, PsiResult) else psi
    _check_arity(poly, f, n)
    expansion = expand_psi(poly, f, n + 1)
    try:
        phi = mp_divide_exact(expansion, _phi_divisor(n))
    except NotDivisibleError:
        logger.error(f"La expansión de Psi_{n} no es divisible por h * Vandermonde")
        raise
    if phi.is_zero():
        raise CertificationError(f"Phi_{n} es idénticamente cero")
    return PhiResult(phi=phi, n=n)


def phi_recombines(
    phi: PhiResult, psi: Union[PsiResult, MultiPoly], f: WellConditionedTuple
) -> bool:
    """True si ``h_1...h_{n+1} * Vandermonde * Phi_n`` reproduce la expansión."""
    poly = psi.psi if isinstance(psi, PsiResult) else psi
    expansion = expand_psi(poly, f, phi.n + 1)
    return _phi_divisor(phi.n) * phi.phi == expansion
