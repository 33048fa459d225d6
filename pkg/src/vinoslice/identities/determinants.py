"""
Determinantes simbólicos: la matriz por bloques D_n y el factor Theta.
"""

from itertools import combinations
from typing import List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from ..algebra.multipoly import (
    MultiPoly,
    mp_divide_exact,
    vandermonde,
    z_gens,
    zh_gens,
)
from ..systems.tuples import WellConditionedTuple
from ..utils.logging import get_logger
from .errors import TupleLengthError
from .models import BlockDet, Minor, ThetaResult

logger = get_logger("identities.determinants")

THETA_SAMPLES = 5


def _det(rows: Sequence[Sequence[MultiPoly]], gens: Tuple[str, ...]) -> MultiPoly:
    """Determinante exacto sobre ``ZZ[gens]`` (eliminación sin fracciones)."""
    size = len(rows)
    if size == 0:
        return MultiPoly.one(gens)
    ring = rows[0][0].ring
    matrix = DomainMatrix(
        [[entry.raw for entry in row] for row in rows], (size, size), ring.to_domain()
    )
    return MultiPoly(ring(matrix.det()))


def _submatrix(
    rows: Sequence[Sequence[MultiPoly]], drop_rows: Sequence[int], drop_cols: Sequence[int]
) -> List[List[MultiPoly]]:
    return [
        [entry for j, entry in enumerate(row) if j not in drop_cols]
        for i, row in enumerate(rows)
        if i not in drop_rows
    ]


def block_rows(f: WellConditionedTuple, n: int) -> List[List[MultiPoly]]:
    """
    Filas de D_n: ``h_i f_j'(z_i)`` para i <= n y luego ``f_j(z_i)`` para i <= n+1.
    """
    gens = zh_gens(n + 1)
    derivatives = [f[j].derivative() for j in range(1, f.t + 1)]
    rows: List[List[MultiPoly]] = []
    for i in range(1, n + 1):
        h = MultiPoly.variable(gens, f"h{i}")
        rows.append([h * d.to_multipoly(f"z{i}", gens) for d in derivatives])
    for i in range(1, n + 2):
        rows.append([f[j].to_multipoly(f"z{i}", gens) for j in range(1, f.t + 1)])
    return rows


def det_block(f: WellConditionedTuple, n: int) -> BlockDet:
    """
    Determinante de D_n con su expansión de Laplace por las filas 1 y n+1.

    U(a) es el menor 2x2 de esas filas en las columnas ``a``; V(a) el menor
    complementario. El signo sale de la paridad de filas y columnas, de modo que
    la suma de ``sign * U(a) * V(a)`` reproduce el determinante.

    Args:
        f: Tupla de longitud 2n+1
        n: Nivel (n >= 0)

    Returns:
        BlockDet: Determinante y menores (columnas 1-indexadas)
    """
    if f.t != 2 * n + 1:
        raise TupleLengthError(f.t, 2 * n + 1)
    gens = zh_gens(n + 1)
    rows = block_rows(f, n)
    det = _det(rows, gens)

    if n == 0:
        return BlockDet(
            n=0, det=det, minors=[Minor((1,), det, MultiPoly.one(gens), 1)]
        )

    minors = []
    pair = (0, n)
    for a1, a2 in combinations(range(2 * n + 1), 2):
        u = _det([[rows[i][a1], rows[i][a2]] for i in pair], gens)
        v = _det(_submatrix(rows, pair, (a1, a2)), gens)
        sign = -1 if (n + a1 + a2) % 2 else 1
        minors.append(Minor((a1 + 1, a2 + 1), u, v, sign))

    logger.debug(f"det(D_{n}) con {len(det)} términos y {len(minors)} menores")
    return BlockDet(n=n, det=det, minors=minors)


def _sample_points(f: WellConditionedTuple, m: int, count: int) -> List[Tuple[int, ...]]:
    """Puntos con coordenadas equiespaciadas y todas >= 10 * (suma de |coeficientes|)."""
    base = 10 * max(1, sum(abs(c) for j in range(1, m + 1) for c in f[j].coeffs))
    points = []
    for q in range(count):
        start = base * (q + 1)
        points.append(tuple(start + i * (q + 1) for i in range(m)))
    return points


def theta_factor(
    f: WellConditionedTuple, m: int, samples: int = THETA_SAMPLES
) -> ThetaResult:
    """
    Cociente exacto de ``det(f_j(z_i))_{m x m}`` por ``prod_{i<j} (z_i - z_j)``.

    Args:
        f: Tupla con t >= m
        m: Tamaño
        samples: Número de puntos grandes donde se evalúa Theta

    Returns:
        ThetaResult: Theta en ``z_1..z_m`` y sus valores muestreados
    """
    if not 1 <= m <= f.t:
        raise TupleLengthError(f.t, m)
    gens = z_gens(m)
    rows = [
        [f[j].to_multipoly(f"z{i}", gens) for j in range(1, m + 1)]
        for i in range(1, m + 1)
    ]
    det = _det(rows, gens)
    theta = mp_divide_exact(det, vandermonde(gens, gens))
    values = [(point, theta.evaluate(point)) for point in _sample_points(f, m, samples)]
    logger.debug(f"Theta (m={m}) = {theta}")
    return ThetaResult(theta=theta, m=m, samples=values)
