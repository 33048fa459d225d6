"""
Enumeración explícita de soluciones del sistema auxiliar por encuentro en el medio.
"""

from collections import defaultdict
from itertools import product
from typing import Dict, List, Tuple

from ..systems.tuples import WellConditionedTuple
from ..utils.logging import get_logger
from .oracle import Solution

logger = get_logger("counting.solutions")

Half = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _halves(f: WellConditionedTuple, s: int, X: int, H: int) -> Dict[Tuple[int, ...], List[Half]]:
    """Agrupa las mitades ``(z, h)`` de s pares por su vector ``sum h_i f(z_i)``."""
    table = [f.values(z) for z in range(X + 1)]
    pairs = [(z, h) for z in range(1, X + 1) for h in range(-H, H + 1)]
    grouped: Dict[Tuple[int, ...], List[Half]] = defaultdict(list)
    for half in product(pairs, repeat=s):
        key = [0] * f.t
        for z, h in half:
            if h:
                vals = table[z]
                for j in range(f.t):
                    key[j] += h * vals[j]
        grouped[tuple(key)].append(
            (tuple(z for z, _ in half), tuple(h for _, h in half))
        )
    return grouped


def enumerate_aux_solutions(
    f: WellConditionedTuple, s: int, X: int, H: int
) -> List[Solution]:
    """
    Todas las soluciones ``(z, h)`` con ``sum_{i<=2s} h_i f_j(z_i) = 0``.

    Args:
        f: Tupla bien condicionada
        s: Pares por mitad
        X: Caja de z
        H: Cota de |h|

    Returns:
        List[Solution]: Soluciones ordenadas lexicográficamente por (z, h)
    """
    grouped = _halves(f, s, X, H)
    solutions: List[Solution] = []
    for key, lefts in grouped.items():
        rights = grouped.get(tuple(-v for v in key))
        if not rights:
            continue
        for (zl, hl), (zr, hr) in product(lefts, rights):
            solutions.append((zl + zr, hl + hr))
    solutions.sort()
    logger.debug(f"{len(solutions)} soluciones (s={s}, X={X}, H={H})")
    return solutions
