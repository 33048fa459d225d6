"""
Errores de los conteos exactos.
"""


class CountingError(Exception):
    """Excepción base para errores de conteo."""
    pass


class CapacityExceededError(CountingError):
    """Se lanza cuando una tabla de representaciones supera el límite de claves."""

    def __init__(self, keys: int, capacity: int):
        self.keys = keys
        self.capacity = capacity
        super().__init__(
            f"La tabla alcanzó {keys} claves, por encima del límite {capacity}"
        )


class OracleCeilingExceededError(CountingError):
    """Se lanza cuando la enumeración exhaustiva supera el techo configurado."""

    def __init__(self, size: int, ceiling: int):
        self.size = size
        self.ceiling = ceiling
        super().__init__(
            f"Enumeración de {size} tuplas por encima del techo {ceiling}"
        )


class InvalidCountParametersError(CountingError):
    """Se lanza cuando los parámetros de un conteo están fuera de dominio."""
    pass


class IncompatibleKeysError(CountingError):
    """Se lanza al combinar tablas con empaquetadores distintos."""
    pass
