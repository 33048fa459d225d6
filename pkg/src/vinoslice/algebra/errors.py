"""
Errores del álgebra exacta de polinomios.
"""

from typing import Optional, Sequence


class AlgebraError(Exception):
    """Excepción base para errores de álgebra polinomial."""
    pass


class VariableOrderMismatchError(AlgebraError):
    """Se lanza cuando dos polinomios no comparten el orden de variables."""

    def __init__(self, left: Sequence[str], right: Sequence[str]):
        self.left = tuple(left)
        self.right = tuple(right)
        super().__init__(
            f"Órdenes de variables distintos: {self.left} frente a {self.right}"
        )


class NotDivisibleError(AlgebraError):
    """Se lanza cuando la división exacta deja resto no nulo."""

    def __init__(self, dividend: str, divisor: str):
        self.dividend = dividend
        self.divisor = divisor
        super().__init__(f"{dividend} no es divisible por {divisor}")


class PolynomialDivisionByZeroError(AlgebraError, ZeroDivisionError):
    """Se lanza al dividir por el polinomio cero."""
    pass


class ArityMismatchError(AlgebraError):
    """Se lanza cuando un punto o una lista no tiene la aridad esperada."""

    def __init__(self, expected: int, got: int, what: Optional[str] = None):
        self.expected = expected
        self.got = got
        label = what or "valores"
        super().__init__(f"Se esperaban {expected} {label}, se recibieron {got}")


class PolynomialParseError(AlgebraError):
    """Se lanza cuando un texto no representa un polinomio válido."""

    def __init__(self, message: str, text: str):
        self.text = text
        super().__init__(message)


class UncertifiedKernelError(AlgebraError):
    """Se lanza cuando el núcleo numérico no es trivial pero ningún candidato se certifica."""

    def __init__(self, ncols: int, attempts: int):
        self.ncols = ncols
        self.attempts = attempts
        super().__init__(
            f"Ningún vector del núcleo ({ncols} columnas) se certificó en {attempts} intentos"
        )
