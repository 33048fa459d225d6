"""
Modelos de datos compartidos: parámetros, informes de conteo y ajustes.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

CountMethod = Literal["mitm", "naive"]
SystemKind = Literal["sliced", "aux", "vmvt", "lifted", "u2"]


class SliceParams(BaseModel):
    """Parámetros (s, k, r, X, H) de un sistema con rebanada omitida."""

    model_config = ConfigDict(frozen=True)

    s: int = Field(ge=1, description="Pares por lado")
    k: int = Field(ge=1, description="Grado máximo")
    r: int = Field(ge=0, description="Grado omitido (0: ninguno)")
    X: int = Field(ge=1, description="Tamaño de la caja")
    H: Optional[int] = Field(default=None, ge=1, description="Cota de |h|")

    @model_validator(mode="after")
    def _check_slice(self) -> "SliceParams":
        if self.r != 0 and not self.r < self.k:
            raise ValueError(f"Se requiere 1 <= r < k (k={self.k}, r={self.r})")
        return self


@dataclass
class CountReport:
    """Resultado exacto de un conteo."""

    system: SystemKind
    count: int
    method: CountMethod
    elapsed_s: float = 0.0
    s: Optional[int] = None
    k: Optional[int] = None
    r: Optional[int] = None
    t: Optional[int] = None
    X: Optional[int] = None
    H: Optional[int] = None
    experiment: str = ""
    extra: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("El conteo no puede ser negativo")

    @property
    def params(self) -> Dict[str, Optional[int]]:
        return {
            "s": self.s,
            "k": self.k,
            "r": self.r,
            "t": self.t,
            "X": self.X,
            "H": self.H,
        }


@dataclass
class FitResult:
    """Ajuste por mínimos cuadrados de log(count) frente a log(X)."""

    points: List[Tuple[int, int]]
    slope: float
    intercept: float
    max_residual: float
    experiment: str = ""
    target: Optional[float] = None

    def within(self, tolerance: float = 0.5) -> bool:
        """Comprobación unilateral: pendiente <= objetivo + tolerancia."""
        if self.target is None:
            return True
        return self.slope <= self.target + tolerance


@dataclass
class BoundParams:
    """Exponentes objetivo y restricciones de parámetros."""

    s: int
    k: int
    r: int
    t: int
    kappa: int
    u: Fraction
    v: Fraction
    w: Fraction
    delta: Fraction
    targets: Dict[str, Fraction] = field(default_factory=dict)
    flags: Dict[str, bool] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        """Representación serializable (racionales como texto ``p/q``)."""
        return {
            "s": self.s,
            "k": self.k,
            "r": self.r,
            "t": self.t,
            "kappa": self.kappa,
            "u": str(self.u),
            "v": str(self.v),
            "w": str(self.w),
            "delta": str(self.delta),
            "targets": {name: str(value) for name, value in self.targets.items()},
            "flags": dict(self.flags),
        }


@dataclass
class ExperimentResult:
    """Resultado de un experimento: conteos, ajustes y estadísticas."""

    experiment: str
    reports: List[CountReport] = field(default_factory=list)
    fits: List[FitResult] = field(default_factory=list)
    stats: Dict[str, Any] = field(default_factory=dict)
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Sin errores registrados y con todas las comprobaciones superadas."""
        checks = self.extra.get("checks", {})
        return self.stats.get("errors", 0) == 0 and all(checks.values())
