"""
Resultados de las identidades: Psi, Phi, determinantes y factor Theta.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from ..algebra.multipoly import MultiPoly


@dataclass(frozen=True)
class PsiResult:
    """Polinomio Psi_n normalizado y su certificación."""

    psi: MultiPoly
    n: int
    total_degree: int
    certified: bool
    minimal: bool = True

    def as_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "psi": self.psi.to_text(),
            "gens": list(self.psi.gens),
            "total_degree": self.total_degree,
            "certified": self.certified,
            "minimal": self.minimal,
        }


@dataclass(frozen=True)
class PhiResult:
    """Cofactor Phi_n en (z_1..z_{n+1}, h_1..h_{n+1})."""

    phi: MultiPoly
    n: int

    def as_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "phi": self.phi.to_text(), "gens": list(self.phi.gens)}


@dataclass(frozen=True)
class Minor:
    """Término U(a) V(a) de la expansión de Laplace por dos filas."""

    columns: Tuple[int, ...]
    u: MultiPoly
    v: MultiPoly
    sign: int


@dataclass(frozen=True)
class BlockDet:
    """Determinante de D_n y su expansión en menores."""

    n: int
    det: MultiPoly
    minors: List[Minor] = field(default_factory=list)

    def expansion(self) -> MultiPoly:
        """Suma de ``sign * U(a) * V(a)``."""
        total = MultiPoly.zero(self.det.gens)
        for minor in self.minors:
            total = total + minor.u * minor.v * minor.sign
        return total

    def as_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "det": self.det.to_text(),
            "gens": list(self.det.gens),
            "minors": [
                {
                    "columns": list(m.columns),
                    "sign": m.sign,
                    "U": m.u.to_text(),
                    "V": m.v.to_text(),
                }
                for m in self.minors
            ],
            "expansion_ok": self.expansion() == self.det,
        }


@dataclass(frozen=True)
class ThetaResult:
    """Factor Theta y sus evaluaciones en puntos grandes."""

    theta: MultiPoly
    m: int
    samples: List[Tuple[Tuple[int, ...], int]] = field(default_factory=list)

    @property
    def definite(self) -> bool:
        """|Theta| >= 1 en todas las muestras."""
        return all(abs(value) >= 1 for _, value in self.samples)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "theta": self.theta.to_text(),
            "gens": list(self.theta.gens),
            "samples": [
                {"z": list(point), "value": str(value)} for point, value in self.samples
            ],
            "definite": self.definite,
        }


@dataclass
class IdentityReport:
    """Verificación de las dos identidades explícitas."""

    first_identity_ok: bool
    second_identity_divisible: bool
    f63: MultiPoly
    f63_bidegree: Tuple[int, int]
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            self.first_identity_ok
            and self.second_identity_divisible
            and self.f63_bidegree == (6, 3)
            and all(self.checks.values())
        )

    def as_dict(self) -> Dict[str, Any]:
        return {
            "first_identity_ok": self.first_identity_ok,
            "second_identity_divisible": self.second_identity_divisible,
            "F63": self.f63.to_text(),
            "F63_bidegree": list(self.f63_bidegree),
            "checks": dict(self.checks),
            "ok": self.ok,
        }
