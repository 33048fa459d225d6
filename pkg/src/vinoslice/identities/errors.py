"""
Errores de construcción y verificación de identidades polinomiales.
"""

from typing import Sequence


class IdentityError(Exception):
    """Excepción base para identidades polinomiales."""
    pass


class PsiNotFoundError(IdentityError):
    """Se lanza cuando no hay dependencia hasta el grado máximo."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"No se encontró Psi_{n} con grado <= {cap}")


class LevelNotSupportedError(IdentityError):
    """Se lanza para niveles n fuera del alcance simbólico."""

    def __init__(self, n: int, message: str = ""):
        self.n = n
        super().__init__(message or f"Nivel n={n} no soportado")


class TupleLengthError(IdentityError):
    """Se lanza cuando la tupla no tiene la longitud requerida."""

    def __init__(self, t: int, required: int):
        self.t = t
        self.required = required
        super().__init__(f"La tupla tiene {t} polinomios; se requieren {required}")


class CertificationError(IdentityError):
    """Se lanza cuando una verificación simbólica falla."""
    pass


class RepeatedShiftError(IdentityError):
    """Se lanza cuando los desplazamientos a_i no son distintos."""

    def __init__(self, shifts: Sequence[int]):
        self.shifts = tuple(shifts)
        super().__init__(f"Desplazamientos repetidos: {self.shifts}")


class ZeroHVectorError(IdentityError):
    """Se lanza cuando el vector h es nulo."""
    pass


class ShiftParameterError(IdentityError):
    """Se lanza cuando los vectores h y a no cumplen 1 <= u <= k."""
    pass
