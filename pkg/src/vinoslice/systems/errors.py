"""
Errores de construcción y validación de tuplas de polinomios.
"""

from typing import Optional, Sequence


class TupleError(Exception):
    """Excepción base para tuplas de polinomios."""
    pass


class EmptyTupleError(TupleError):
    """Se lanza cuando la tupla no contiene polinomios."""
    pass


class ZeroPolynomialInTupleError(TupleError):
    """Se lanza cuando algún f_j es idénticamente cero."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"El polinomio f_{index} es idénticamente cero")


class DegreesNotStrictlyDecreasingError(TupleError):
    """Se lanza cuando los grados no decrecen estrictamente."""

    def __init__(self, degrees: Sequence[int]):
        self.degrees = tuple(degrees)
        super().__init__(f"Los grados {self.degrees} no decrecen estrictamente")


class CommonPositiveRootError(TupleError):
    """Se lanza cuando todos los f_j se anulan en un entero positivo."""

    def __init__(self, root: int):
        self.root = root
        super().__init__(f"Raíz positiva común z = {root}")


class IndexOutOfRangeError(TupleError):
    """Se lanza cuando un índice j o un nivel n está fuera de rango."""

    def __init__(self, index: int, bound: int, what: str = "índice"):
        self.index = index
        self.bound = bound
        super().__init__(f"{what} {index} fuera del rango 1..{bound}")


class InvalidSliceError(TupleError):
    """Se lanza cuando no se cumple 1 <= r < k."""

    def __init__(self, k: int, r: int):
        self.k = k
        self.r = r
        super().__init__(f"Se requiere 1 <= r < k (k={k}, r={r})")


class TupleFileError(TupleError):
    """Se lanza cuando un archivo de tupla es ilegible o está mal formado."""

    def __init__(self, message: str, path: str, line: Optional[int] = None):
        self.path = path
        self.line = line
        super().__init__(message)
