"""
Conteos exactos por encuentro en el medio.

Todos los valores medios se calculan como conteos de puntos reticulares: por
ortogonalidad, el número de soluciones es la suma de productos de
multiplicidades de tablas de representaciones.
"""

import math
import time
from itertools import combinations_with_replacement
from typing import List, Optional

import numpy as np

from ..models import CountReport
from ..systems.tuples import WellConditionedTuple, monomial_tuple, omega
from ..utils.logging import get_logger
from .errors import InvalidCountParametersError
from .repmap import DEFAULT_CAPACITY, KeyPacker, RepMap

logger = get_logger("counting.counts")


def _degrees(k: int, r: int) -> List[int]:
    """Grados activos 1..k sin r (r = 0: ninguno omitido)."""
    if k < 1 or r < 0 or (r != 0 and r >= k + 1):
        raise InvalidCountParametersError(f"Parámetros de grado inválidos (k={k}, r={r})")
    return [j for j in range(1, k + 1) if j != r]


def _check_box(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise InvalidCountParametersError(f"Se requiere {name} >= 1 (recibido {value})")


def rep_power_sums(
    s: int,
    k: int,
    r: int,
    X: int,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
) -> RepMap:
    """
    Tabla de los vectores de sumas de potencias ``(sum x_i^j)_{j != r}``.

    Args:
        s: Número de variables
        k: Grado máximo
        r: Grado omitido (0: ninguno)
        X: Caja 1 <= x_i <= X
        threads: Particiones en paralelo
        capacity: Límite de claves

    Returns:
        RepMap: Tabla de multiplicidades sobre ``[1, X]^s``
    """
    _check_box(s=s, X=X)
    degrees = _degrees(k, r)
    packer = KeyPacker([s * X**j for j in degrees])
    single = RepMap.from_vectors(
        ([x**j for j in degrees] for x in range(1, X + 1)), packer, capacity
    )
    return single.power(s, threads=threads)


def _report(
    system: str,
    count: int,
    start: float,
    **params: Optional[int],
) -> CountReport:
    elapsed = time.time() - start
    report = CountReport(
        system=system,  # type: ignore[arg-type]
        count=count,
        method="mitm",
        elapsed_s=elapsed,
        **params,  # type: ignore[arg-type]
    )
    logger.info(f"Conteo {system} {report.params} = {count} ({elapsed:.3f}s)")
    return report


def count_sliced(
    s: int,
    k: int,
    r: int,
    X: int,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
) -> CountReport:
    """Número I_{s,k,r}(X) de soluciones del sistema sin la ecuación de grado r."""
    if not 1 <= r < k:
        raise InvalidCountParametersError(f"Se requiere 1 <= r < k (k={k}, r={r})")
    start = time.time()
    rep = rep_power_sums(s, k, r, X, threads=threads, capacity=capacity)
    return _report("sliced", rep.sum_of_squares(), start, s=s, k=k, r=r, t=k - 1, X=X)


def count_vmvt(
    sigma_count: int,
    d: int,
    X: int,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
) -> CountReport:
    """Valor medio completo J_{sigma,d}(X) con todos los grados 1..d."""
    _check_box(sigma=sigma_count, d=d)
    start = time.time()
    rep = rep_power_sums(sigma_count, d, 0, X, threads=threads, capacity=capacity)
    return _report("vmvt", rep.sum_of_squares(), start, s=sigma_count, k=d, r=0, t=d, X=X)


def aux_pair_map(
    f: WellConditionedTuple,
    s: int,
    X: int,
    H: int,
    capacity: int = DEFAULT_CAPACITY,
) -> RepMap:
    """Tabla de un par ``(h, z) -> h * f(z)`` con radios para ``2s`` pares."""
    values = [f.values(z) for z in range(1, X + 1)]
    radii = [s * H * max(abs(v[j]) for v in values) for j in range(f.t)]
    packer = KeyPacker(radii)
    bases = [packer.pack(v) for v in values]
    packed = np.outer(np.arange(-H, H + 1, dtype=object), np.array(bases, dtype=object))
    return RepMap.from_packed(packed.ravel().tolist(), packer, capacity)


def count_aux(
    f: WellConditionedTuple,
    s: int,
    r: int,
    X: int,
    H: Optional[int] = None,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
    k: Optional[int] = None,
) -> CountReport:
    """
    Número A_{s,r}(X; f) de soluciones de ``sum_{i<=2s} h_i f_j(z_i) = 0``.

    Args:
        f: Tupla bien condicionada
        s: Pares por mitad
        r: Exponente del rango de h (H = X^r por defecto)
        X: Caja 1 <= z_i <= X
        H: Cota |h_i| <= H
        threads: Particiones en paralelo
        capacity: Límite de claves
        k: Grado máximo del sistema de origen (por defecto f_1 tiene grado k - r)

    Returns:
        CountReport: Conteo exacto
    """
    _check_box(s=s, r=r, X=X)
    H = X**r if H is None else H
    _check_box(H=H)
    start = time.time()
    half = aux_pair_map(f, s, X, H, capacity).power(s, threads=threads)
    count = half.dot(half.negated())
    k = f.degrees[0] + r if k is None else k
    return _report("aux", count, start, s=s, k=k, r=r, t=f.t, X=X, H=H)


def _shifted_count(
    q: int,
    pairs: int,
    k: int,
    r: int,
    X: int,
    H: int,
    threads: int,
    capacity: int,
) -> int:
    """
    Soluciones de ``sum_{i<=q}(x_i^j - y_i^j) = omega_j sum_{l<=pairs} h_l z_l^(j-r)``.

    Con x, y en [1, 2X]^q, z en [1, X] y |h| <= H, para 1 <= j <= k.
    """
    degrees = list(range(1, k + 1))
    weights = [omega(j, r) for j in degrees]
    radii = [
        q * (2 * X) ** j + pairs * w * H * X ** max(j - r, 0)
        for j, w in zip(degrees, weights)
    ]
    packer = KeyPacker(radii)

    if q:
        single = RepMap.from_vectors(
            ([x**j for j in degrees] for x in range(1, 2 * X + 1)), packer, capacity
        )
        side = single.power(q, threads=threads)
    else:
        side = RepMap.identity(packer, capacity)

    shifts = [
        packer.pack([w * z ** (j - r) if w else 0 for j, w in zip(degrees, weights)])
        for z in range(1, X + 1)
    ]
    packed = np.outer(np.arange(-H, H + 1, dtype=object), np.array(shifts, dtype=object))
    rhs = RepMap.from_packed(packed.ravel().tolist(), packer, capacity).power(
        pairs, threads=threads
    )
    # x contribuye P(x) = P(y) + rhs
    return side.dot(side.convolve(rhs, threads=threads))


def count_lifted(
    s: int,
    k: int,
    r: int,
    X: int,
    H: Optional[int] = None,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
) -> CountReport:
    """
    Conteo N del sistema desplazado: u, v en [1, 2X]^s, |h| <= sX^r, z en [1, X].

    Cumple ``X * I_{s,k,r}(X) <= N``.
    """
    if not 1 <= r < k:
        raise InvalidCountParametersError(f"Se requiere 1 <= r < k (k={k}, r={r})")
    _check_box(s=s, X=X)
    H = s * X**r if H is None else H
    start = time.time()
    count = _shifted_count(s, 1, k, r, X, H, threads, capacity)
    return _report("lifted", count, start, s=s, k=k, r=r, t=k, X=X, H=H)


def count_u2(
    s: int,
    k: int,
    r: int,
    kappa: int,
    X: int,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
) -> CountReport:
    """
    Valor medio U_2: ``r(r-1)/2`` pares (x, y) en [1, 2X] frente a ``2*kappa``
    pares (h, z) con |h| <= sX^r.
    """
    if not 1 <= r < k:
        raise InvalidCountParametersError(f"Se requiere 1 <= r < k (k={k}, r={r})")
    _check_box(s=s, kappa=kappa, X=X)
    q = r * (r - 1) // 2
    H = s * X**r
    start = time.time()
    count = _shifted_count(q, 2 * kappa, k, r, X, H, threads, capacity)
    report = _report("u2", count, start, s=s, k=k, r=r, t=k - r + 1, X=X, H=H)
    report.extra["kappa"] = kappa
    return report


def u2_upper_bound(
    s: int,
    k: int,
    r: int,
    kappa: int,
    X: int,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
) -> int:
    """Cota ``J_{q,r-1}(2X) * A_{kappa,r}(X; f, H = sX^r)`` con q = r(r-1)/2."""
    q = r * (r - 1) // 2
    if q == 0:
        j_count = 1
    else:
        j_count = count_vmvt(q, r - 1, 2 * X, threads, capacity).count
    f = monomial_tuple(k, r)
    a_count = count_aux(f, kappa, r, X, H=s * X**r, threads=threads, capacity=capacity)
    return j_count * a_count.count


def zero_sum_count(length: int, H: int) -> int:
    """Número de ``h`` en ``[-H, H]^length`` con suma cero."""
    if length == 0:
        return 1
    base = np.ones(2 * H + 1, dtype=object)
    dist = np.array([1], dtype=object)
    for _ in range(length):
        dist = np.convolve(dist, base)
    return int(dist[length * H])


def diagonal_aux_lower_bound(f: WellConditionedTuple, s: int, X: int, H: int) -> int:
    """
    Aporte exacto de las soluciones con z_1 = ... = z_2s.

    En una tupla bien condicionada algún f_j(z) es no nulo, así que esas
    soluciones son exactamente las de ``sum h_i = 0``.
    """
    return X * zero_sum_count(2 * s, H)


def diagonal_count(s: int, X: int) -> int:
    """Número de pares (x, y) en [1, X]^s con y permutación de x."""
    total = 0
    for multiset in combinations_with_replacement(range(X), s):
        arrangements = math.factorial(s)
        for value in set(multiset):
            arrangements //= math.factorial(multiset.count(value))
        total += arrangements * arrangements
    return total

