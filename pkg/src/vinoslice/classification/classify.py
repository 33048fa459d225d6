"""
Clasificación de las soluciones del sistema ``sum_{i<=2s} h_i f_j(z_i) = 0``
(1 <= j <= 2s-1) en los tipos S_0, T_{n,m} y S_s.

Los tipos originales pueden solaparse; aquí se elige el n mínimo y después el m
mínimo, de modo que las etiquetas forman una partición. Los testigos se buscan
en orden lexicográfico de combinaciones.
"""

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple

from ..algebra.multipoly import MultiPoly
from ..identities.cache import PsiCache
from ..identities.errors import TupleLengthError
from ..identities.psi import find_psi
from ..systems.tuples import WellConditionedTuple
from ..utils.logging import get_logger
from .errors import ClassificationError, LevelCapExceededError, NotASolutionError
from .tsets import CoefficientSets, build_T_sets

logger = get_logger("classification.classify")

MAX_S = 3

Solution = Tuple[Tuple[int, ...], Tuple[int, ...]]
LabelKind = Literal["S0", "T", "Ss"]

_KIND_ORDER = {"S0": 0, "T": 1, "Ss": 2}


@dataclass(frozen=True)
class SolutionLabel:
    """Tipo asignado a una solución y sus testigos (índices 1-indexados)."""

    kind: LabelKind
    s: int
    n: int
    m: Optional[int] = None
    witness_j: Tuple[int, ...] = ()
    witness_iota: Tuple[int, ...] = ()

    @property
    def name(self) -> str:
        if self.kind == "S0":
            return "S_0"
        if self.kind == "Ss":
            return f"S_{self.s}"
        return f"T_{{{self.n},{self.m}}}"

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        return (_KIND_ORDER[self.kind], self.n, -1 if self.m is None else self.m)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "label": self.name,
            "n": self.n,
            "m": self.m,
            "witness_j": list(self.witness_j),
            "witness_iota": list(self.witness_iota),
        }


@dataclass
class ClassificationSummary:
    """Etiquetas en el orden de entrada e histograma por tipo."""

    labels: List[SolutionLabel] = field(default_factory=list)
    histogram: Dict[str, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.histogram.values())

    def as_dict(self, with_labels: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {"total": self.total, "histogram": dict(self.histogram)}
        if with_labels:
            data["labels"] = [label.as_dict() for label in self.labels]
        return data


@dataclass(frozen=True)
class DivisibilityDiagnostic:
    """Comprobación de divisibilidad para el testigo j de una solución."""

    witness: Tuple[int, ...]
    complement: Tuple[int, ...]
    value: int
    divisor: int
    equal: bool
    divisible: bool

    @property
    def ok(self) -> bool:
        return self.equal and self.value != 0 and self.divisible

    def as_dict(self) -> Dict[str, Any]:
        return {
            "witness": list(self.witness),
            "complement": list(self.complement),
            "N": str(self.value),
            "divisor": str(self.divisor),
            "equal": self.equal,
            "divisible": self.divisible,
            "ok": self.ok,
        }


class SolutionClassifier:
    """
    Clasificador para una tupla y un número de pares s fijos.

    Busca Psi_0..Psi_{s-1} y los conjuntos T_{n,m} una sola vez; después
    ``classify`` solo evalúa polinomios en enteros y puede usarse desde varios
    hilos.
    """

    def __init__(
        self,
        f: WellConditionedTuple,
        s: int,
        seed: int = 0,
        cache: Optional[PsiCache] = None,
    ):
        """
        Args:
            f: Tupla con t >= 2s-1
            s: Pares por mitad (1 <= s <= 3)
            seed: Semilla de la búsqueda de Psi_n
            cache: Caché de Psi_n
        """
        if s < 1 or s > MAX_S:
            raise LevelCapExceededError(s, MAX_S)
        if f.t < 2 * s - 1:
            raise TupleLengthError(f.t, 2 * s - 1)
        self.f = f
        self.s = s
        self.psis: Dict[int, MultiPoly] = {}
        self.tsets: Dict[int, CoefficientSets] = {}
        for n in range(s):
            result = find_psi(f.prefix(2 * n + 1), n, seed=seed, cache=cache)
            self.psis[n] = result.psi
            if n >= 1:
                self.tsets[n] = build_T_sets(f, n, psi=result)
        logger.debug(f"Clasificador listo (s={s}, niveles 0..{s - 1})")

    # Evaluación de condiciones

    def _sigma(
        self,
        values: Sequence[Tuple[int, ...]],
        h: Sequence[int],
        idx: Sequence[int],
        count: int,
    ) -> List[int]:
        return [sum(h[i] * values[i][j] for i in idx) for j in range(count)]

    def _g(
        self,
        n: int,
        values: Sequence[Tuple[int, ...]],
        h: Sequence[int],
        idx: Sequence[int],
    ) -> int:
        """``Psi_n(sigma_{1,n+1}, ..., sigma_{2n+1,n+1})`` en los pares ``idx``."""
        return self.psis[n].evaluate(self._sigma(values, h, idx, 2 * n + 1))

    def _condition_ii(
        self, n: int, values: Sequence[Tuple[int, ...]], h: Sequence[int]
    ) -> Optional[Tuple[int, ...]]:
        """Primer n-subconjunto con Psi_{n-1} no nulo; () si n = 0."""
        if n == 0:
            return ()
        for idx in combinations(range(2 * self.s), n):
            if self._g(n - 1, values, h, idx):
                return idx
        return None

    @staticmethod
    def _at(
        poly: MultiPoly, z: Sequence[int], h: Sequence[int], idx: Sequence[int]
    ) -> int:
        return poly.evaluate([z[i] for i in idx] + [h[i] for i in idx])

    def _subdivide(
        self, n: int, j: Tuple[int, ...], z: Sequence[int], h: Sequence[int]
    ) -> Tuple[int, Tuple[int, ...]]:
        """m mínimo con la condición (iii), y el testigo de la condición (iv)."""
        tsets = self.tsets[n]
        rest = [i for i in range(2 * self.s) if i not in j]
        for m in range(n + 1):
            vanishes = all(
                self._at(psi, z, h, idx) == 0
                for idx in combinations(rest, m + 1)
                for psi in tsets[m + 1]
            )
            if not vanishes:
                continue
            if m == 0:
                return 0, ()
            for iota in combinations(rest, m):
                if any(self._at(phi, z, h, iota) for phi in tsets[m]):
                    return m, iota
            raise ClassificationError(f"Sin testigo para la condición (iv) con m={m}")
        raise ClassificationError(f"Ningún m <= {n} cumple la condición (iii)")

    # API

    def check_solution(self, z: Sequence[int], h: Sequence[int]) -> None:
        """Lanza NotASolutionError si (z, h) no resuelve el sistema."""
        if len(z) != 2 * self.s or len(h) != 2 * self.s:
            raise NotASolutionError(z, h, f"Se esperaban {2 * self.s} pares (z_i, h_i)")
        values = [self.f.values(zi) for zi in z]
        for j in range(2 * self.s - 1):
            if sum(hi * v[j] for hi, v in zip(h, values)):
                raise NotASolutionError(z, h)

    def classify(self, z: Sequence[int], h: Sequence[int]) -> SolutionLabel:
        """
        Etiqueta una solución.

        Returns:
            SolutionLabel: S_0, T_{n,m} (1 <= n < s) o S_s

        Raises:
            NotASolutionError: Si (z, h) no es solución
        """
        self.check_solution(z, h)
        values = [self.f.values(zi) for zi in z]
        s = self.s

        witness: Tuple[int, ...] = ()
        level = s
        for n in range(s):
            following = self._condition_ii(n + 1, values, h)
            if following is None:
                level = n
                break
            witness = following

        if level == 0:
            return SolutionLabel(kind="S0", s=s, n=0)
        witness_j = tuple(i + 1 for i in witness)
        if level == s:
            return SolutionLabel(kind="Ss", s=s, n=s, witness_j=witness_j)
        m, iota = self._subdivide(level, witness, z, h)
        return SolutionLabel(
            kind="T",
            s=s,
            n=level,
            m=m,
            witness_j=witness_j,
            witness_iota=tuple(i + 1 for i in iota),
        )

    def verify_witnesses(
        self, label: SolutionLabel, z: Sequence[int], h: Sequence[int]
    ) -> bool:
        """Reevalúa las condiciones (ii) y (iv) en los testigos de la etiqueta."""
        values = [self.f.values(zi) for zi in z]
        if label.witness_j:
            idx = [i - 1 for i in label.witness_j]
            if self._g(len(idx) - 1, values, h, idx) == 0:
                return False
        if label.witness_iota and label.m is not None:
            iota = [i - 1 for i in label.witness_iota]
            if not any(self._at(phi, z, h, iota) for phi in self.tsets[label.n][label.m]):
                return False
        return True

    def divisibility(
        self, label: SolutionLabel, z: Sequence[int], h: Sequence[int]
    ) -> DivisibilityDiagnostic:
        """
        Para el testigo j (|j| = n), compara ``N = Psi_{n-1}`` en el complemento con
        -h frente a su valor en j, y comprueba que ``h_j * prod (z_a - z_b)`` divide N.
        """
        if not label.witness_j:
            raise ClassificationError(f"La etiqueta {label.name} no tiene testigo j")
        values = [self.f.values(zi) for zi in z]
        n = len(label.witness_j)
        idx = [i - 1 for i in label.witness_j]
        rest = [i for i in range(2 * self.s) if i not in idx]
        neg_h = [-v for v in h]
        psi = self.psis[n - 1]
        value = psi.evaluate(self._sigma(values, neg_h, rest, 2 * n - 1))
        at_witness = psi.evaluate(self._sigma(values, h, idx, 2 * n - 1))
        divisor = math.prod(h[i] for i in idx) * math.prod(
            z[a] - z[b] for a, b in combinations(idx, 2)
        )
        return DivisibilityDiagnostic(
            witness=label.witness_j,
            complement=tuple(i + 1 for i in rest),
            value=value,
            divisor=divisor,
            equal=value == at_witness,
            divisible=divisor != 0 and value % divisor == 0,
        )


def classify(
    solution: Solution,
    f: WellConditionedTuple,
    s: int,
    classifier: Optional[SolutionClassifier] = None,
) -> SolutionLabel:
    """Etiqueta una solución ``(z, h)`` del sistema con 2s pares."""
    classifier = classifier or SolutionClassifier(f, s)
    z, h = solution
    return classifier.classify(z, h)


def classify_all(
    solutions: Sequence[Solution],
    f: WellConditionedTuple,
    s: int,
    threads: int = 1,
    classifier: Optional[SolutionClassifier] = None,
) -> ClassificationSummary:
    """
    Etiqueta una lista de soluciones repartida en bloques entre hilos.

    Returns:
        ClassificationSummary: Etiquetas en el orden de entrada e histograma
        ordenado por tipo
    """
    classifier = classifier or SolutionClassifier(f, s)
    threads = max(1, threads)

    def run(chunk: Sequence[Solution]) -> List[SolutionLabel]:
        return [classifier.classify(z, h) for z, h in chunk]

    if threads == 1 or len(solutions) < 2:
        labels = run(solutions)
    else:
        size = math.ceil(len(solutions) / threads)
        chunks = [solutions[i : i + size] for i in range(0, len(solutions), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            labels = [label for part in pool.map(run, chunks) for label in part]

    counts = Counter(labels)
    histogram = {
        label.name: 0 for label in sorted(counts, key=lambda lbl: lbl.sort_key)
    }
    for label, count in counts.items():
        histogram[label.name] += count
    logger.info(f"{len(labels)} soluciones clasificadas: {histogram}")
    return ClassificationSummary(labels=labels, histogram=histogram)


def divisibility_diagnostic(
    solution: Solution,
    label: SolutionLabel,
    f: WellConditionedTuple,
    s: int,
    classifier: Optional[SolutionClassifier] = None,
) -> DivisibilityDiagnostic:
    """Diagnóstico de divisibilidad de una solución etiquetada S_s o T_{n,m}."""
    classifier = classifier or SolutionClassifier(f, s)
    z, h = solution
    return classifier.divisibility(label, z, h)


def class_exponent_targets(s: int, r: int) -> Dict[str, int]:
    """
    Exponentes objetivo de cada tipo: S_0 -> (2s-1)r+1, T_{n,m} -> r(2s-n)+m y
    S_s -> (r+1)s.
    """
    targets = {"S_0": (2 * s - 1) * r + 1}
    for n in range(1, s):
        for m in range(n + 1):
            targets[f"T_{{{n},{m}}}"] = r * (2 * s - n) + m
    targets[f"S_{s}"] = (r + 1) * s
    return targets
