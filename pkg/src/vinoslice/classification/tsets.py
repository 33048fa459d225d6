"""
Jerarquía de conjuntos de coeficientes T_{n,m}.

T_{n,n+1} contiene solo la expansión de nivel n+1 de Psi_n. Cada T_{n,m} se
obtiene tomando los coeficientes no nulos de los elementos de T_{n,m+1} vistos
como polinomios en (z_{m+1}, h_{m+1}).
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..algebra.multipoly import MultiPoly
from ..identities.cache import PsiCache
from ..identities.errors import TupleLengthError
from ..identities.models import PsiResult
from ..identities.psi import expand_psi, find_psi
from ..systems.tuples import WellConditionedTuple
from ..utils.logging import get_logger

logger = get_logger("classification.tsets")


@dataclass
class CoefficientSets:
    """Conjuntos T_{n,m} para 0 <= m <= n+1."""

    n: int
    sets: Dict[int, List[MultiPoly]] = field(default_factory=dict)

    def __getitem__(self, m: int) -> List[MultiPoly]:
        return self.sets[m]

    def max_degree(self, m: int) -> int:
        """Máximo grado total de los elementos de T_{n,m}."""
        return max(p.total_degree() for p in self.sets[m])

    def as_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "sets": {
                str(m): [p.to_text() for p in polys]
                for m, polys in sorted(self.sets.items(), reverse=True)
            },
        }


def coefficient_layer(polys: List[MultiPoly], m: int) -> List[MultiPoly]:
    """
    Coeficientes no nulos respecto de ``(z_{m+1}, h_{m+1})``, sin repetidos.

    Args:
        polys: Elementos de T_{n,m+1} en ``(z_1..z_{m+1}, h_1..h_{m+1})``
        m: Nivel de destino

    Returns:
        List[MultiPoly]: Elementos de T_{n,m} en ``(z_1..z_m, h_1..h_m)``
    """
    layer: List[MultiPoly] = []
    seen = set()
    for psi in polys:
        for coeff in psi.coefficients_in([f"z{m + 1}", f"h{m + 1}"]).values():
            if coeff.is_zero() or coeff in seen:
                continue
            seen.add(coeff)
            layer.append(coeff)
    return layer


def build_T_sets(
    f: WellConditionedTuple,
    n: int,
    psi: Optional[PsiResult] = None,
    seed: int = 0,
    cache: Optional[PsiCache] = None,
) -> CoefficientSets:
    """
    Construye T_{n,m} desde m = n+1 hasta m = 0.

    Args:
        f: Tupla con t >= 2n+1 (se usan f_1..f_{2n+1})
        n: Nivel
        psi: Psi_n ya certificado; si falta se busca
        seed: Semilla de la búsqueda de Psi_n
        cache: Caché de Psi_n

    Returns:
        CoefficientSets: Jerarquía completa
    """
    if f.t < 2 * n + 1:
        raise TupleLengthError(f.t, 2 * n + 1)
    prefix = f.prefix(2 * n + 1)
    if psi is None:
        psi = find_psi(prefix, n, seed=seed, cache=cache)

    sets = CoefficientSets(n=n)
    sets.sets[n + 1] = [expand_psi(psi.psi, prefix, n + 1)]
    for m in range(n, -1, -1):
        sets.sets[m] = coefficient_layer(sets.sets[m + 1], m)
        logger.debug(f"T_{{{n},{m}}}: {len(sets.sets[m])} polinomios")
    return sets
