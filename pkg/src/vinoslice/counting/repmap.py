"""
Tablas de representaciones: vector de valores -> multiplicidad.

Cada vector se empaqueta en un único entero mediante una base mixta balanceada
cuyos radios acotan los valores finales del conteo. El empaquetado es lineal,
así que sumar vectores equivale a sumar sus claves. Las claves y multiplicidades
viven en arreglos de numpy ``int64``; si las cotas no caben en 62 bits se usa
``dtype=object`` (enteros de precisión arbitraria) con el mismo algoritmo.
"""

import hashlib
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..utils.logging import get_logger
from .errors import CapacityExceededError, IncompatibleKeysError

logger = get_logger("counting.repmap")

PowerKey = Tuple[int, ...]

INT64_LIMIT = 2**62
COUNT_LIMIT = 2**63 - 1
DEFAULT_CAPACITY = 50_000_000
CHUNK_ELEMENTS = 1 << 22


class KeyPacker:
    """Empaquetado lineal de vectores enteros acotados por ``radii``."""

    def __init__(self, radii: Sequence[int]):
        """
        Args:
            radii: Cota S_j >= |v_j| para cada coordenada
        """
        self.radii: Tuple[int, ...] = tuple(int(r) for r in radii)
        if any(r < 0 for r in self.radii):
            raise ValueError("Los radios deben ser no negativos")
        self.bases: Tuple[int, ...] = tuple(2 * r + 1 for r in self.radii)
        multipliers = []
        m = 1
        for b in self.bases:
            multipliers.append(m)
            m *= b
        self.multipliers: Tuple[int, ...] = tuple(multipliers)
        self.span = m
        self.fits_int64 = m <= INT64_LIMIT
        max_radius = max(self.radii, default=0)
        self.value_width = max(1, (max_radius.bit_length() + 8) // 8)

    @property
    def arity(self) -> int:
        return len(self.radii)

    @property
    def key_dtype(self) -> type:
        return np.int64 if self.fits_int64 else object

    def __eq__(self, other: object) -> bool:
        return isinstance(other, KeyPacker) and self.radii == other.radii

    def __hash__(self) -> int:
        return hash(self.radii)

    def pack(self, vector: Sequence[int]) -> int:
        if len(vector) != self.arity:
            raise IncompatibleKeysError(
                f"Vector de aridad {len(vector)}; se esperaba {self.arity}"
            )
        for v, r in zip(vector, self.radii):
            if abs(v) > r:
                raise IncompatibleKeysError(f"Valor {v} fuera del radio {r}")
        return sum(int(v) * m for v, m in zip(vector, self.multipliers))

    def unpack(self, key: int) -> PowerKey:
        values = []
        key = int(key)
        for r, b in zip(self.radii, self.bases):
            digit = (key + r) % b - r
            values.append(digit)
            key = (key - digit) // b
        return tuple(values)

    def encode(self, vector: Sequence[int]) -> bytes:
        """Concatenación little-endian de ancho fijo ``value_width`` por valor."""
        return b"".join(
            int(v).to_bytes(self.value_width, "little", signed=True) for v in vector
        )

    def header(self) -> bytes:
        """Cabecera de la corrida: aridad (u16) y ancho por valor (u8)."""
        return self.arity.to_bytes(2, "little") + self.value_width.to_bytes(1, "little")


def encode_key(vector: Sequence[int], packer: KeyPacker) -> bytes:
    """Codificación binaria canónica de una clave."""
    return packer.encode(vector)


def _compress(keys: np.ndarray, counts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Ordena claves y suma las multiplicidades repetidas."""
    if keys.size == 0:
        return keys, counts
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    counts = counts[order]
    starts = np.concatenate(([0], np.flatnonzero(keys[1:] != keys[:-1]) + 1))
    return keys[starts], np.add.reduceat(counts, starts)


class RepMap:
    """Tabla de representaciones con claves empaquetadas."""

    def __init__(
        self,
        packer: KeyPacker,
        keys: np.ndarray,
        counts: np.ndarray,
        capacity: int = DEFAULT_CAPACITY,
    ):
        self.packer = packer
        self.keys = keys
        self.counts = counts
        self.capacity = capacity
        if keys.size > capacity:
            raise CapacityExceededError(int(keys.size), capacity)

    @classmethod
    def from_vectors(
        cls,
        vectors: Iterable[Sequence[int]],
        packer: KeyPacker,
        capacity: int = DEFAULT_CAPACITY,
    ) -> "RepMap":
        """Tabla de un solo término: cada vector con multiplicidad 1."""
        return cls.from_packed([packer.pack(v) for v in vectors], packer, capacity)

    @classmethod
    def from_packed(
        cls,
        packed: Sequence[int],
        packer: KeyPacker,
        capacity: int = DEFAULT_CAPACITY,
    ) -> "RepMap":
        keys = np.array(list(packed), dtype=packer.key_dtype)
        counts = np.ones(keys.size, dtype=np.int64)
        keys, counts = _compress(keys, counts)
        return cls(packer, keys, counts, capacity)

    @classmethod
    def identity(cls, packer: KeyPacker, capacity: int = DEFAULT_CAPACITY) -> "RepMap":
        """Tabla de la suma vacía: la clave cero con multiplicidad 1."""
        return cls.from_packed([0], packer, capacity)

    # Consultas

    @property
    def num_keys(self) -> int:
        return int(self.keys.size)

    def total_mass(self) -> int:
        return int(np.sum(self.counts.astype(object))) if self.counts.size else 0

    def sum_of_squares(self) -> int:
        """Suma de multiplicidades al cuadrado, en enteros exactos."""
        c = self.counts.astype(object)
        return int(np.dot(c, c)) if c.size else 0

    def dot(self, other: "RepMap") -> int:
        """``sum_a self(a) * other(a)`` sobre las claves comunes."""
        self._check_compatible(other)
        common, ia, ib = np.intersect1d(
            self.keys, other.keys, assume_unique=True, return_indices=True
        )
        if common.size == 0:
            return 0
        return int(np.dot(self.counts[ia].astype(object), other.counts[ib].astype(object)))

    def negated(self) -> "RepMap":
        keys, counts = _compress(-self.keys, self.counts.copy())
        return RepMap(self.packer, keys, counts, self.capacity)

    def get(self, vector: Sequence[int]) -> int:
        key = self.packer.pack(vector)
        idx = np.searchsorted(self.keys, key)
        if idx < self.keys.size and self.keys[idx] == key:
            return int(self.counts[idx])
        return 0

    def as_dict(self) -> Dict[PowerKey, int]:
        """Mapa explícito vector -> multiplicidad (ordenado por clave empaquetada)."""
        return {
            self.packer.unpack(k): int(c)
            for k, c in zip(self.keys.tolist(), self.counts.tolist())
        }

    def digest(self) -> str:
        """Huella sha256 de la tabla con la codificación binaria canónica."""
        h = hashlib.sha256(self.packer.header())
        for k, c in zip(self.keys.tolist(), self.counts.tolist()):
            h.update(self.packer.encode(self.packer.unpack(k)))
            h.update(int(c).to_bytes(16, "little", signed=False))
        return h.hexdigest()

    # Convolución

    def convolve(self, other: "RepMap", threads: int = 1) -> "RepMap":
        """
        Tabla de sumas ``a + b`` con multiplicidad ``self(a) * other(b)``.

        Args:
            other: Tabla con el mismo empaquetador
            threads: Particiones procesadas en paralelo; el resultado no depende
                de este valor

        Returns:
            RepMap: Tabla convolucionada
        """
        self._check_compatible(other)
        count_dtype = self._product_dtype(other)
        left = (self.keys, self._as_counts(count_dtype))
        right = other._as_counts(count_dtype)

        threads = max(1, min(threads, other.num_keys or 1))
        if threads == 1:
            keys, counts = _convolve_arrays(
                left, (other.keys, right), self.capacity
            )
        else:
            bounds = np.linspace(0, other.num_keys, threads + 1).astype(int)
            parts = [
                (other.keys[a:b], right[a:b])
                for a, b in zip(bounds[:-1], bounds[1:])
                if b > a
            ]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                partials = list(
                    pool.map(lambda part: _convolve_arrays(left, part, self.capacity), parts)
                )
            logger.debug(f"Fusionando {len(partials)} particiones")
            keys, counts = _merge(partials)
        return RepMap(self.packer, keys, counts, self.capacity)

    def power(self, s: int, threads: int = 1) -> "RepMap":
        """Convolución ``s`` veces de la tabla consigo misma."""
        if s < 0:
            raise ValueError("Potencia negativa")
        if s == 0:
            return RepMap.identity(self.packer, self.capacity)
        result = self
        for step in range(2, s + 1):
            result = result.convolve(self, threads=threads)
            logger.debug(f"Convolución {step}/{s}: {result.num_keys} claves")
        return result

    # Auxiliares

    def _check_compatible(self, other: "RepMap") -> None:
        if self.packer != other.packer:
            raise IncompatibleKeysError("Las tablas usan empaquetadores distintos")

    def _product_dtype(self, other: "RepMap") -> type:
        if self.counts.dtype == object or other.counts.dtype == object:
            return object
        if self.total_mass() * other.total_mass() > COUNT_LIMIT:
            logger.warning(
                "Multiplicidades cercanas a 2^63: se promueve a precisión arbitraria"
            )
            return object
        return np.int64

    def _as_counts(self, dtype: type) -> np.ndarray:
        return self.counts if self.counts.dtype == dtype else self.counts.astype(dtype)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepMap):
            return NotImplemented
        return (
            self.packer == other.packer
            and self.keys.tolist() == other.keys.tolist()
            and self.counts.tolist() == other.counts.tolist()
        )

    def __repr__(self) -> str:
        return f"RepMap(keys={self.num_keys}, mass={self.total_mass()})"


def _convolve_arrays(
    left: Tuple[np.ndarray, np.ndarray],
    right: Tuple[np.ndarray, np.ndarray],
    capacity: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """Convolución por bloques de filas de ``left`` frente a todo ``right``."""
    left_keys, left_counts = left
    right_keys, right_counts = right
    if left_keys.size == 0 or right_keys.size == 0:
        return left_keys[:0], left_counts[:0]

    rows_per_chunk = max(1, CHUNK_ELEMENTS // right_keys.size)
    partials: List[Tuple[np.ndarray, np.ndarray]] = []
    pending = 0
    threshold = 4 * CHUNK_ELEMENTS
    for start in range(0, left_keys.size, rows_per_chunk):
        stop = start + rows_per_chunk
        keys = (left_keys[start:stop, None] + right_keys[None, :]).ravel()
        counts = (left_counts[start:stop, None] * right_counts[None, :]).ravel()
        partials.append(_compress(keys, counts))
        pending += partials[-1][0].size
        if pending > threshold:
            partials = [_merge(partials, capacity)]
            pending = partials[0][0].size
            threshold = max(threshold, 2 * pending)
    return _merge(partials, capacity)


def _merge(
    partials: List[Tuple[np.ndarray, np.ndarray]],
    capacity: Optional[int] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """Concatena tablas parciales y suma multiplicidades de claves repetidas."""
    keys = np.concatenate([p[0] for p in partials])
    counts = np.concatenate([p[1] for p in partials])
    keys, counts = _compress(keys, counts)
    if capacity is not None and keys.size > capacity:
        raise CapacityExceededError(int(keys.size), capacity)
    return keys, counts
