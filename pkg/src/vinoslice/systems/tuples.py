"""
Tuplas bien condicionadas f = (f_1, ..., f_t) y formas sigma.
"""

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Set, Tuple, Union

from sympy import divisors

from ..algebra.multipoly import MultiPoly, Monomial, zh_gens
from ..utils.logging import get_logger
from .errors import (
    CommonPositiveRootError,
    DegreesNotStrictlyDecreasingError,
    EmptyTupleError,
    IndexOutOfRangeError,
    InvalidSliceError,
    TupleFileError,
    ZeroPolynomialInTupleError,
)
from .unipoly import UniPoly

logger = get_logger("systems.tuples")


@dataclass(frozen=True)
class WellConditionedTuple:
    """Tupla validada: grados estrictamente decrecientes y sin raíz positiva común."""

    polys: Tuple[UniPoly, ...]

    @property
    def t(self) -> int:
        return len(self.polys)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(p.degree for p in self.polys)

    def __getitem__(self, j: int) -> UniPoly:
        """Acceso 1-indexado a f_j."""
        if not 1 <= j <= self.t:
            raise IndexOutOfRangeError(j, self.t)
        return self.polys[j - 1]

    def values(self, z: int) -> Tuple[int, ...]:
        """Vector ``(f_1(z), ..., f_t(z))``."""
        return tuple(p(z) for p in self.polys)

    def prefix(self, m: int) -> "WellConditionedTuple":
        """Los primeros ``m`` polinomios (sin revalidar raíces comunes)."""
        if not 1 <= m <= self.t:
            raise IndexOutOfRangeError(m, self.t, "longitud")
        return WellConditionedTuple(self.polys[:m])

    def descriptor(self) -> List[List[int]]:
        """Coeficientes ascendentes de cada f_j, para informes y claves de caché."""
        return [list(p.coeffs) for p in self.polys]

    def to_text(self) -> str:
        return "\n".join(p.to_text() for p in self.polys) + "\n"


def _root_candidates(poly: UniPoly) -> Set[int]:
    """Candidatos racionales positivos a raíz entera de ``poly``."""
    coeffs = list(poly.coeffs)
    # Quitar factores z
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return set()
    return {int(d) for d in divisors(abs(coeffs[0]))}


def validate_tuple(polys: Sequence[UniPoly]) -> WellConditionedTuple:
    """
    Valida una tupla de polinomios.

    Args:
        polys: Polinomios f_1, ..., f_t no nulos

    Returns:
        WellConditionedTuple: Tupla validada

    Raises:
        EmptyTupleError: Si la tupla está vacía
        ZeroPolynomialInTupleError: Si algún polinomio es cero
        DegreesNotStrictlyDecreasingError: Si no se cumple k_t < ... < k_1
        CommonPositiveRootError: Si todos se anulan en un entero positivo
    """
    if not polys:
        raise EmptyTupleError("La tupla de polinomios está vacía")
    for j, p in enumerate(polys, start=1):
        if p.is_zero():
            raise ZeroPolynomialInTupleError(j)

    degrees = [p.degree for p in polys]
    if any(a <= b for a, b in zip(degrees, degrees[1:])):
        raise DegreesNotStrictlyDecreasingError(degrees)

    lowest = polys[-1]
    if lowest.degree > 0:
        candidates = _root_candidates(lowest)
        if lowest.coeffs[0] == 0 and len(polys) > 1:
            candidates |= _root_candidates(polys[-2])
        for z in sorted(candidates):
            if all(p(z) == 0 for p in polys):
                raise CommonPositiveRootError(z)

    return WellConditionedTuple(tuple(polys))


def monomial_tuple(k: int, r: int) -> WellConditionedTuple:
    """
    Tupla ``f_j(z) = z^(k-r+1-j)`` para ``1 <= j <= k-r+1``.

    Args:
        k: Grado máximo
        r: Grado omitido

    Returns:
        WellConditionedTuple: Tupla de longitud ``k-r+1``
    """
    if not 1 <= r < k:
        raise InvalidSliceError(k, r)
    t = k - r + 1
    return validate_tuple([UniPoly.monomial(t - j) for j in range(1, t + 1)])


def omega(j: int, r: int) -> int:
    """Coeficiente ``omega_j``: 0 si j < r, binomial(j, r) en otro caso."""
    if j < 1 or r < 1:
        raise IndexOutOfRangeError(min(j, r), max(j, r, 1), "grado")
    return 0 if j < r else math.comb(j, r)


def sigma(f: WellConditionedTuple, j: int, n: int) -> MultiPoly:
    """
    Forma ``sigma_{j,n} = h_1 f_j(z_1) + ... + h_n f_j(z_n)``.

    Args:
        f: Tupla de polinomios
        j: Índice 1..t
        n: Número de pares (z_i, h_i)

    Returns:
        MultiPoly: Polinomio en ``(z_1..z_n, h_1..h_n)``
    """
    if n < 1:
        raise IndexOutOfRangeError(n, max(n, 1), "nivel")
    poly = f[j]
    gens = zh_gens(n)
    terms: Dict[Monomial, int] = {}
    for i in range(n):
        for e, c in enumerate(poly.coeffs):
            if c:
                monom = [0] * (2 * n)
                monom[i] = e
                monom[n + i] = 1
                terms[tuple(monom)] = c
    return MultiPoly.from_terms(gens, terms)


def sigma_forms(f: WellConditionedTuple, count: int, n: int) -> List[MultiPoly]:
    """Las formas ``sigma_{1,n}, ..., sigma_{count,n}``."""
    return [sigma(f, j, n) for j in range(1, count + 1)]


def parse_tuple_text(text: str, source: str = "<texto>") -> WellConditionedTuple:
    """
    Lee una tupla: un polinomio por línea, coeficientes ascendentes separados por comas.

    Las líneas vacías y las que empiezan por ``#`` se ignoran.
    """
    polys: List[UniPoly] = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            coeffs = [int(part) for part in line.split(",")]
        except ValueError:
            raise TupleFileError(f"Coeficientes no enteros en la línea {number}", source, number)
        polys.append(UniPoly(coeffs))
    return validate_tuple(polys)


def load_tuple_file(path: Union[str, Path]) -> WellConditionedTuple:
    """Carga una tupla desde un archivo de texto."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise TupleFileError(f"No se pudo leer el archivo de tupla: {e}", str(path))
    tup = parse_tuple_text(text, str(path))
    logger.debug(f"Tupla cargada de {path}: grados {tup.degrees}")
    return tup
