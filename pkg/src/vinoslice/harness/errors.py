"""
Errores del arnés de experimentos e informes.
"""

from typing import Any


class HarnessError(Exception):
    """Excepción base para el arnés."""
    pass


class InsufficientPointsError(HarnessError):
    """Se lanza cuando un ajuste recibe menos de dos puntos."""

    def __init__(self, count: int):
        self.count = count
        super().__init__(f"Se requieren al menos 2 puntos para ajustar (recibidos {count})")


class ZeroCountError(HarnessError):
    """Se lanza cuando un conteo nulo impide tomar logaritmos."""

    def __init__(self, X: int):
        self.X = X
        super().__init__(f"Conteo nulo en X={X}")


class NonIncreasingGridError(HarnessError):
    """Se lanza cuando los valores de X no son estrictamente crecientes."""
    pass


class ParameterDomainError(HarnessError):
    """Se lanza cuando un parámetro está fuera de su dominio."""

    def __init__(self, name: str, value: Any, message: str = ""):
        self.name = name
        self.value = value
        super().__init__(message or f"Parámetro fuera de dominio: {name}={value}")


class ReportFormatError(HarnessError):
    """Se lanza ante un formato de informe desconocido o un informe ilegible."""

    def __init__(self, fmt: str, message: str = ""):
        self.fmt = fmt
        super().__init__(message or f"Formato de informe no soportado: {fmt}")


class ReportWriteError(HarnessError):
    """Se lanza cuando no se puede escribir un informe."""
    pass
