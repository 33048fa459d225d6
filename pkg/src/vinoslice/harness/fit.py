"""
Ajuste de exponentes: pendiente de log(count) frente a log(X).
"""

import math
from typing import Optional, Sequence, Tuple

import numpy as np

from ..models import FitResult
from ..utils.logging import get_logger
from .errors import InsufficientPointsError, NonIncreasingGridError, ZeroCountError

logger = get_logger("harness.fit")


def fit_exponent(
    points: Sequence[Tuple[int, int]],
    experiment: str = "",
    target: Optional[float] = None,
) -> FitResult:
    """
    Ajuste por mínimos cuadrados de ``log(count) = slope * log(X) + intercept``.

    Args:
        points: Pares (X, count) con X estrictamente creciente
        experiment: Nombre del experimento
        target: Exponente esperado, para la comprobación unilateral

    Returns:
        FitResult: Pendiente, ordenada y residuo máximo

    Raises:
        InsufficientPointsError: Con menos de dos puntos
        NonIncreasingGridError: Si X no crece estrictamente
        ZeroCountError: Si algún conteo es menor que 1
    """
    if len(points) < 2:
        raise InsufficientPointsError(len(points))
    xs = [int(x) for x, _ in points]
    if any(a >= b for a, b in zip(xs, xs[1:])):
        raise NonIncreasingGridError(f"Los valores de X deben crecer estrictamente: {xs}")
    for x, count in points:
        if count < 1:
            raise ZeroCountError(x)

    # math.log admite enteros de cualquier tamaño
    log_x = np.array([math.log(x) for x in xs])
    log_c = np.array([math.log(count) for _, count in points])
    slope, intercept = np.polyfit(log_x, log_c, 1)
    residuals = log_c - (slope * log_x + intercept)
    result = FitResult(
        points=[(int(x), int(c)) for x, c in points],
        slope=float(slope),
        intercept=float(intercept),
        max_residual=float(np.max(np.abs(residuals))),
        experiment=experiment,
        target=target,
    )
    logger.debug(f"Ajuste {experiment or '-'}: pendiente {result.slope:.4f}")
    return result
