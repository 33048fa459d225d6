"""
Búsqueda de dependencias lineales entre polinomios.

Los candidatos se obtienen evaluando en puntos aleatorios: el rango módulo dos
primos cercanos a 2^62 descarta núcleos triviales, y un vector del núcleo se
obtiene por eliminación libre de fracciones sobre los enteros. Todo vector
devuelto se certifica después por expansión simbólica completa.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import prevprime
from sympy.polys.domains import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from ..utils.logging import get_logger
from .errors import (
    ArityMismatchError,
    UncertifiedKernelError,
    VariableOrderMismatchError,
)
from .multipoly import MultiPoly

logger = get_logger("algebra.dependency")

# Generador de filas: recibe el generador aleatorio y devuelve una fila entera
RowSampler = Callable[[np.random.Generator], List[int]]
Certifier = Callable[[Tuple[int, ...]], bool]

EXTRA_ROWS = 8
MAX_ATTEMPTS = 4


@dataclass(frozen=True)
class DependencyResult:
    """Resultado de una búsqueda de dependencia lineal."""

    found: bool
    coefficients: Tuple[int, ...] = ()
    degree: int = -1


@lru_cache(maxsize=None)
def search_primes(count: int = 2) -> Tuple[int, ...]:
    """Primos distintos inmediatamente por debajo de 2^62."""
    primes: List[int] = []
    p = 2**62
    for _ in range(count):
        p = int(prevprime(p))
        primes.append(p)
    return tuple(primes)


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rango de la matriz entera reducida módulo ``p``."""
    field = GF(p)
    matrix = DomainMatrix.from_list([[v % p for v in row] for row in rows], field)
    return int(matrix.rank())


def integer_kernel(rows: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Base del núcleo racional, con vectores enteros (eliminación sin fracciones)."""
    matrix = DomainMatrix.from_list([list(row) for row in rows], ZZ)
    basis = matrix.nullspace().to_list()
    return [tuple(int(v) for v in vec) for vec in basis]


def normalize_vector(vector: Sequence[int]) -> Tuple[int, ...]:
    """Divide por el contenido y deja positivo el primer coeficiente no nulo."""
    content = math.gcd(*(int(v) for v in vector))
    if content == 0:
        return tuple(int(v) for v in vector)
    result = [int(v) // content for v in vector]
    lead = next(v for v in result if v)
    if lead < 0:
        result = [-v for v in result]
    return tuple(result)


def search_kernel(
    sample_row: RowSampler,
    ncols: int,
    certify: Certifier,
    seed: int = 0,
    extra_rows: int = EXTRA_ROWS,
    max_attempts: int = MAX_ATTEMPTS,
) -> Optional[Tuple[int, ...]]:
    """
    Busca un vector entero primitivo en el núcleo de una familia de columnas.

    Args:
        sample_row: Evalúa las ``ncols`` columnas en un punto aleatorio
        ncols: Número de columnas (candidatos)
        certify: Verificación simbólica de un vector candidato
        seed: Semilla del generador aleatorio
        extra_rows: Filas adicionales sobre ``ncols``
        max_attempts: Reintentos con más filas si la certificación falla

    Returns:
        Optional[Tuple[int, ...]]: Vector normalizado y certificado, o None si el
        núcleo es trivial

    Raises:
        UncertifiedKernelError: Si el núcleo no es trivial pero ningún candidato
            pasa la certificación simbólica
    """
    if ncols == 0:
        return None
    rng = np.random.default_rng(seed)
    rows: List[List[int]] = []
    target = ncols + extra_rows

    for attempt in range(1, max_attempts + 1):
        while len(rows) < target:
            row = sample_row(rng)
            if len(row) != ncols:
                raise ArityMismatchError(ncols, len(row), "columnas")
            rows.append(row)

        # Rango completo módulo p implica rango completo sobre Q
        for p in search_primes():
            rank = rank_mod_p(rows, p)
            logger.debug(f"Rango módulo {p}: {rank} de {ncols}")
            if rank == ncols:
                return None

        kernel = integer_kernel(rows)
        if not kernel:
            return None
        logger.debug(f"Núcleo candidato de dimensión {len(kernel)} (intento {attempt})")

        candidate = normalize_vector(kernel[0])
        if certify(candidate):
            return candidate

        logger.warning(
            f"Candidato no certificado en el intento {attempt}; se añaden más puntos"
        )
        target = len(rows) + ncols

    logger.warning("La certificación falló en todos los intentos")
    raise UncertifiedKernelError(ncols, max_attempts)


def linear_dependency(
    polys: Sequence[MultiPoly],
    degree_cap: Optional[int] = None,
    degrees: Optional[Sequence[int]] = None,
    seed: int = 0,
) -> DependencyResult:
    """
    Busca ``c`` primitivo con ``sum(c_i * polys_i) == 0`` idénticamente.

    Args:
        polys: Polinomios con el mismo orden de variables (p. ej. las imágenes
            de los w-monomios bajo una sustitución), en orden de monomios decreciente
        degree_cap: Si se da junto a ``degrees``, solo se usan los de grado <= cap
        degrees: Grado del w-monomio asociado a cada polinomio
        seed: Semilla para los puntos de evaluación

    Returns:
        DependencyResult: Dependencia certificada o ``found=False``

    Raises:
        UncertifiedKernelError: Si ningún candidato se certifica
    """
    if not polys:
        raise ArityMismatchError(1, 0, "polinomios")
    gens = polys[0].gens
    for p in polys:
        if p.gens != gens:
            raise VariableOrderMismatchError(gens, p.gens)
    if degrees is not None and len(degrees) != len(polys):
        raise ArityMismatchError(len(polys), len(degrees), "grados")

    indices = list(range(len(polys)))
    if degree_cap is not None and degrees is not None:
        indices = [i for i in indices if degrees[i] <= degree_cap]
    active = [polys[i] for i in indices]
    nvars = len(gens)

    def sample_row(rng: np.random.Generator) -> List[int]:
        point = [int(v) for v in rng.integers(-(2**20), 2**20, size=nvars)]
        return [p.evaluate(point) for p in active]

    def certify(vector: Tuple[int, ...]) -> bool:
        total = MultiPoly.zero(gens)
        for c, p in zip(vector, active):
            if c:
                total = total + p * c
        return total.is_zero()

    vector = search_kernel(sample_row, len(active), certify, seed=seed)
    if vector is None:
        return DependencyResult(found=False)

    full = [0] * len(polys)
    for i, c in zip(indices, vector):
        full[i] = c
    support = [i for i, c in enumerate(full) if c]
    if degrees is not None:
        degree = max(degrees[i] for i in support)
    else:
        degree = max(polys[i].total_degree() for i in support)
    return DependencyResult(found=True, coefficients=tuple(full), degree=degree)
