"""
Oráculo de fuerza bruta: enumeración por bucles anidados, sin tablas hash.

Sirve como validador independiente de los conteos por encuentro en el medio.
"""

import time
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Literal, Optional, Sequence, Tuple

from ..models import CountReport
from ..systems.tuples import WellConditionedTuple, omega
from ..utils.logging import get_logger
from .errors import InvalidCountParametersError, OracleCeilingExceededError

logger = get_logger("counting.oracle")

DEFAULT_CEILING = 10**8

Solution = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class SystemDescriptor:
    """Descripción de un sistema para el oráculo."""

    kind: Literal["sliced", "vmvt", "aux", "lifted"]
    s: int
    X: int
    k: int = 0
    r: int = 0
    H: Optional[int] = None
    f: Optional[WellConditionedTuple] = None

    def resolved_H(self) -> int:
        if self.H is not None:
            return self.H
        if self.kind == "aux":
            return self.X**self.r
        if self.kind == "lifted":
            return self.s * self.X**self.r
        return 0

    def enumeration_size(self) -> int:
        """Número de iteraciones del bucle más interno."""
        if self.kind in ("sliced", "vmvt"):
            return self.X ** (2 * self.s)
        if self.kind == "aux":
            pairs = (2 * self.resolved_H() + 1) * self.X
            return pairs ** (2 * self.s - 1) * self.X
        return (2 * self.X) ** (2 * self.s) * self.X


def _check_ceiling(desc: SystemDescriptor, ceiling: int) -> None:
    size = desc.enumeration_size()
    if size > ceiling:
        raise OracleCeilingExceededError(size, ceiling)


def _power_sums_oracle(s: int, degrees: Sequence[int], X: int) -> int:
    count = 0
    box = range(1, X + 1)
    for x in product(box, repeat=s):
        sums = [sum(v**j for v in x) for j in degrees]
        for y in product(box, repeat=s):
            if all(sum(v**j for v in y) == target for j, target in zip(degrees, sums)):
                count += 1
    return count


def _solve_last_pair(
    values: Sequence[int], residual: Sequence[int], H: int
) -> Optional[int]:
    """h tal que ``residual + h * values == 0``, si existe con |h| <= H."""
    pivot = next((j for j, v in enumerate(values) if v), None)
    if pivot is None:
        return None
    if residual[pivot] % values[pivot]:
        return None
    h = -residual[pivot] // values[pivot]
    if abs(h) > H:
        return None
    if all(res + h * v == 0 for res, v in zip(residual, values)):
        return h
    return None


def iter_aux_solutions(
    f: WellConditionedTuple, s: int, X: int, H: int
) -> Iterator[Solution]:
    """
    Soluciones ``(z, h)`` de ``sum_{i<=2s} h_i f_j(z_i) = 0`` en orden lexicográfico
    de los primeros ``2s - 1`` pares.

    El último h se despeja de la primera ecuación con coeficiente no nulo; si
    todos los f_j(z_last) fueran cero no habría restricción, pero una tupla bien
    condicionada lo impide.
    """
    pairs = [(z, h) for z in range(1, X + 1) for h in range(-H, H + 1)]
    table = [f.values(z) for z in range(X + 1)]
    for head in product(pairs, repeat=2 * s - 1):
        residual = [0] * f.t
        for z, h in head:
            if h:
                vals = table[z]
                for j in range(f.t):
                    residual[j] += h * vals[j]
        for z_last in range(1, X + 1):
            h_last = _solve_last_pair(table[z_last], residual, H)
            if h_last is not None:
                zs = tuple(z for z, _ in head) + (z_last,)
                hs = tuple(h for _, h in head) + (h_last,)
                yield zs, hs


def _lifted_oracle(s: int, k: int, r: int, X: int, H: int) -> int:
    """
    Cuenta (u, v, h, z). h queda determinado por la ecuación de grado r,
    porque omega_r = 1.
    """
    weights = [omega(j, r) for j in range(1, k + 1)]
    box = range(1, 2 * X + 1)
    count = 0
    for u in product(box, repeat=s):
        su = [sum(a**j for a in u) for j in range(1, k + 1)]
        for v in product(box, repeat=s):
            diff = [a - sum(b**j for b in v) for a, j in zip(su, range(1, k + 1))]
            if any(diff[j - 1] for j in range(1, r)):
                continue
            h = diff[r - 1]
            if abs(h) > H:
                continue
            for z in range(1, X + 1):
                if all(
                    diff[j - 1] == weights[j - 1] * h * z ** (j - r)
                    for j in range(r + 1, k + 1)
                ):
                    count += 1
    return count


def brute_force_oracle(
    desc: SystemDescriptor, ceiling: int = DEFAULT_CEILING
) -> CountReport:
    """
    Conteo exacto por enumeración exhaustiva.

    Args:
        desc: Sistema a contar
        ceiling: Máximo de iteraciones permitidas

    Returns:
        CountReport: Conteo con ``method="naive"``

    Raises:
        OracleCeilingExceededError: Si la enumeración supera el techo
    """
    _check_ceiling(desc, ceiling)
    start = time.time()
    H: Optional[int] = None
    t: int

    if desc.kind == "sliced":
        if not 1 <= desc.r < desc.k:
            raise InvalidCountParametersError("Se requiere 1 <= r < k")
        degrees = [j for j in range(1, desc.k + 1) if j != desc.r]
        count = _power_sums_oracle(desc.s, degrees, desc.X)
        t = desc.k - 1
    elif desc.kind == "vmvt":
        count = _power_sums_oracle(desc.s, list(range(1, desc.k + 1)), desc.X)
        t = desc.k
    elif desc.kind == "aux":
        if desc.f is None:
            raise InvalidCountParametersError("El sistema auxiliar requiere una tupla f")
        H = desc.resolved_H()
        count = sum(1 for _ in iter_aux_solutions(desc.f, desc.s, desc.X, H))
        t = desc.f.t
    elif desc.kind == "lifted":
        if not 1 <= desc.r < desc.k:
            raise InvalidCountParametersError("Se requiere 1 <= r < k")
        H = desc.resolved_H()
        count = _lifted_oracle(desc.s, desc.k, desc.r, desc.X, H)
        t = desc.k
    else:
        raise InvalidCountParametersError(f"Sistema desconocido: {desc.kind}")

    elapsed = time.time() - start
    logger.info(f"Oráculo {desc.kind} (s={desc.s}, X={desc.X}) = {count} ({elapsed:.3f}s)")
    k = desc.k
    if desc.kind == "aux" and desc.f is not None and not desc.k:
        k = desc.f.degrees[0] + desc.r
    return CountReport(
        system=desc.kind,
        count=count,
        method="naive",
        elapsed_s=elapsed,
        s=desc.s,
        k=k,
        r=desc.r,
        t=t,
        X=desc.X,
        H=H,
    )


def aux_solutions(
    f: WellConditionedTuple,
    s: int,
    X: int,
    H: int,
    ceiling: int = DEFAULT_CEILING,
) -> List[Solution]:
    """Lista completa de soluciones del sistema auxiliar, con techo de enumeración."""
    desc = SystemDescriptor(kind="aux", s=s, X=X, H=H, f=f)
    _check_ceiling(desc, ceiling)
    return list(iter_aux_solutions(f, s, X, H))
