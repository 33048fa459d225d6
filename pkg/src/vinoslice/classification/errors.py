"""
Errores de la clasificación de soluciones.
"""

from typing import Sequence


class ClassificationError(Exception):
    """Excepción base para la clasificación."""
    pass


class NotASolutionError(ClassificationError):
    """Se lanza cuando (z, h) no satisface el sistema auxiliar."""

    def __init__(self, z: Sequence[int], h: Sequence[int], message: str = ""):
        self.z = tuple(z)
        self.h = tuple(h)
        super().__init__(message or f"(z={self.z}, h={self.h}) no es solución del sistema")


class LevelCapExceededError(ClassificationError):
    """Se lanza cuando la clasificación requiere Psi_n fuera del alcance."""

    def __init__(self, s: int, max_s: int):
        self.s = s
        self.max_s = max_s
        super().__init__(f"La clasificación con s={s} requiere s <= {max_s}")


class ZeroPolynomialError(ClassificationError):
    """Se lanza cuando se pide contar raíces del polinomio cero."""
    pass
