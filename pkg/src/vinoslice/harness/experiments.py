"""
Experimentos: rejillas de conteos, ajustes de exponente y comprobaciones exactas.

Cada experimento devuelve un ExperimentResult con un diccionario de estadísticas
(experiment, counts, errors, warnings, processing_time).
"""

import time
import traceback
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..classification.classify import (
    SolutionClassifier,
    class_exponent_targets,
    classify_all,
)
from ..counting.counts import (
    count_aux,
    count_lifted,
    count_sliced,
    count_u2,
    count_vmvt,
    diagonal_aux_lower_bound,
    diagonal_count,
    u2_upper_bound,
)
from ..counting.errors import CapacityExceededError, CountingError
from ..counting.repmap import DEFAULT_CAPACITY
from ..counting.solutions import enumerate_aux_solutions
from ..identities.cache import PsiCache
from ..models import CountReport, ExperimentResult
from ..systems.tuples import WellConditionedTuple, monomial_tuple
from ..utils.logging import get_logger
from .bounds import bound_calculator
from .errors import HarnessError, ParameterDomainError
from .fit import fit_exponent

logger = get_logger("harness.experiments")

DEFAULT_GRID = (8, 12, 16, 24, 32, 48)
DEFAULT_TOLERANCE = 0.5
SYSTEMS = ("sliced", "aux", "vmvt", "lifted", "u2")

CountAt = Callable[[int], List[CountReport]]


def _new_stats(experiment: str) -> Dict[str, Any]:
    return {
        "experiment": experiment,
        "counts": 0,
        "errors": 0,
        "warnings": 0,
        "processing_time": 0.0,
    }


def _check_grid(X_grid: Sequence[int]) -> List[int]:
    grid = sorted(set(int(x) for x in X_grid))
    if not grid or grid[0] < 1:
        raise ParameterDomainError("X_grid", list(X_grid), "La rejilla de X debe ser no vacía y positiva")
    return grid


def _run_grid(
    result: ExperimentResult,
    X_grid: Sequence[int],
    count_at: CountAt,
    time_budget_s: Optional[float],
) -> List[int]:
    """
    Recorre la rejilla en orden creciente y devuelve los X completados.

    Se detiene al agotar el presupuesto de tiempo o la capacidad de las tablas;
    ambos casos recortan la rejilla con un WARNING.
    """
    stats = result.stats
    start = time.time()
    done: List[int] = []
    for X in _check_grid(X_grid):
        if time_budget_s is not None and time.time() - start >= time_budget_s:
            logger.warning(
                f"{result.experiment}: rejilla recortada en X={X} por el presupuesto "
                f"de {time_budget_s}s"
            )
            stats["warnings"] += 1
            result.extra["clipped_at"] = X
            break
        try:
            reports = count_at(X)
        except CapacityExceededError as e:
            logger.warning(f"{result.experiment}: rejilla recortada en X={X}: {e}")
            stats["warnings"] += 1
            result.extra["clipped_at"] = X
            break
        except CountingError as e:
            logger.error(f"{result.experiment}: error contando en X={X}: {e}")
            logger.debug(traceback.format_exc())
            stats["errors"] += 1
            break
        for report in reports:
            report.experiment = result.experiment
        result.reports.extend(reports)
        stats["counts"] += len(reports)
        done.append(X)
        logger.debug(f"{result.experiment}: X={X} completado")
    return done


def _fit_reports(
    result: ExperimentResult,
    reports: Sequence[CountReport],
    target: Optional[float],
    tolerance: float,
    check_name: str,
    name: Optional[str] = None,
) -> None:
    points = [(report.X, report.count) for report in reports if report.X is not None]
    try:
        fit = fit_exponent(points, experiment=name or result.experiment, target=target)
    except HarnessError as e:
        logger.warning(f"{result.experiment}: ajuste omitido: {e}")
        result.stats["warnings"] += 1
        return
    result.fits.append(fit)
    result.extra.setdefault("checks", {})[check_name] = fit.within(tolerance)
    logger.info(
        f"{result.experiment}: pendiente {fit.slope:.3f} (objetivo {target}, "
        f"tolerancia {tolerance})"
    )


def _finish(result: ExperimentResult, start: float) -> ExperimentResult:
    result.stats["processing_time"] = time.time() - start
    logger.info(
        f"Experimento {result.experiment} completado en "
        f"{result.stats['processing_time']:.2f}s: {result.stats}"
    )
    return result


def count_system(
    system: str,
    X: int,
    s: int,
    k: Optional[int] = None,
    r: Optional[int] = None,
    f: Optional[WellConditionedTuple] = None,
    H: Optional[int] = None,
    kappa: Optional[int] = None,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
) -> CountReport:
    """
    Despacha un conteo por nombre de sistema.

    Args:
        system: "sliced", "aux", "vmvt", "lifted" o "u2"
        X: Tamaño de la caja
        s: Pares por lado (o número de variables en "vmvt")
        k: Grado máximo
        r: Grado omitido o exponente de H
        f: Tupla del sistema auxiliar (por defecto la monomial de (k, r))
        H: Cota de |h| cuando el sistema la admite
        kappa: Parámetro de "u2"
        threads: Particiones en paralelo
        capacity: Límite de claves por tabla

    Returns:
        CountReport: Conteo exacto
    """
    if system not in SYSTEMS:
        raise ParameterDomainError("system", system)
    if system == "aux":
        if r is None:
            raise ParameterDomainError("r", r)
        if f is None:
            if k is None:
                raise ParameterDomainError("f", None, "El sistema auxiliar requiere f o (k, r)")
            f = monomial_tuple(k, r)
        return count_aux(f, s, r, X, H=H, threads=threads, capacity=capacity)
    if k is None:
        raise ParameterDomainError("k", k)
    if system == "vmvt":
        return count_vmvt(s, k, X, threads=threads, capacity=capacity)
    if r is None:
        raise ParameterDomainError("r", r)
    if system == "sliced":
        return count_sliced(s, k, r, X, threads=threads, capacity=capacity)
    if system == "lifted":
        return count_lifted(s, k, r, X, H=H, threads=threads, capacity=capacity)
    if kappa is None:
        raise ParameterDomainError("kappa", kappa)
    return count_u2(s, k, r, kappa, X, threads=threads, capacity=capacity)


def run_count_grid(
    system: str,
    X_grid: Sequence[int] = DEFAULT_GRID,
    experiment: str = "",
    time_budget_s: Optional[float] = None,
    **params: Any,
) -> ExperimentResult:
    """
    Conteos de un sistema sobre una rejilla de X, recortada por presupuesto.

    Args:
        system: Sistema a contar (ver :func:`count_system`)
        X_grid: Valores de X
        experiment: Nombre del experimento
        time_budget_s: Presupuesto de tiempo total
        **params: Parámetros de :func:`count_system`

    Returns:
        ExperimentResult: Un CountReport por X completado
    """
    start = time.time()
    experiment = experiment or f"grid-{system}"
    result = ExperimentResult(experiment=experiment, stats=_new_stats(experiment))
    logger.info(f"Rejilla {system} {params} sobre X={list(X_grid)}")
    try:
        _run_grid(result, X_grid, lambda X: [count_system(system, X, **params)], time_budget_s)
    finally:
        _finish(result, start)
    return result


def aux_growth_probe(
    f: WellConditionedTuple,
    s: int,
    r: int,
    X_grid: Sequence[int] = DEFAULT_GRID,
    H: Optional[int] = None,
    tolerance: float = DEFAULT_TOLERANCE,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
    time_budget_s: Optional[float] = None,
) -> ExperimentResult:
    """
    Crecimiento de A_{s,r}(X; f) frente al exponente ``r(2s-1)+1``.

    Comprueba además que cada conteo supera el aporte exacto de las soluciones
    con todos los z iguales.
    """
    start = time.time()
    result = ExperimentResult(experiment="aux-growth", stats=_new_stats("aux-growth"))
    target = r * (2 * s - 1) + 1
    lower_ok = True

    def count_at(X: int) -> List[CountReport]:
        nonlocal lower_ok
        report = count_aux(f, s, r, X, H=H, threads=threads, capacity=capacity)
        lower = diagonal_aux_lower_bound(f, s, X, report.H or X**r)
        report.extra["diagonal_lower_bound"] = str(lower)
        lower_ok = lower_ok and report.count >= lower
        return [report]

    try:
        _run_grid(result, X_grid, count_at, time_budget_s)
        result.extra["target"] = target
        result.extra.setdefault("checks", {})["diagonal_lower_bound"] = lower_ok
        _fit_reports(result, result.reports, target, tolerance, "slope_within_target")
    finally:
        _finish(result, start)
    return result


def lifted_bound_probe(
    s: int,
    k: int,
    r: int,
    X_grid: Sequence[int] = DEFAULT_GRID,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
    time_budget_s: Optional[float] = None,
) -> ExperimentResult:
    """Desigualdad exacta ``X * I_{s,k,r}(X) < N`` con N el conteo desplazado."""
    start = time.time()
    result = ExperimentResult(experiment="lifted", stats=_new_stats("lifted"))
    rows: List[Dict[str, Any]] = []

    def count_at(X: int) -> List[CountReport]:
        sliced = count_sliced(s, k, r, X, threads=threads, capacity=capacity)
        lifted = count_lifted(s, k, r, X, threads=threads, capacity=capacity)
        rows.append(
            {
                "X": X,
                "I": str(sliced.count),
                "X_times_I": str(X * sliced.count),
                "N": str(lifted.count),
                "strict": X * sliced.count < lifted.count,
            }
        )
        return [sliced, lifted]

    try:
        _run_grid(result, X_grid, count_at, time_budget_s)
        result.extra["rows"] = rows
        result.extra.setdefault("checks", {})["lifted_bound_strict"] = all(
            row["strict"] for row in rows
        )
        violations = [row["X"] for row in rows if not row["strict"]]
        if violations:
            logger.error(f"Desigualdad de elevación sin holgura en X={violations}")
    finally:
        _finish(result, start)
    return result


def diagonal_probe(
    s_values: Sequence[int],
    k: int,
    r: int,
    X_grid: Sequence[int] = DEFAULT_GRID,
    tolerance: float = DEFAULT_TOLERANCE,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
    time_budget_s: Optional[float] = None,
) -> ExperimentResult:
    """
    Comportamiento diagonal de I_{s,k,r}(X): pendiente <= s + tolerancia y
    conteo >= número de soluciones diagonales, para cada s.
    """
    start = time.time()
    result = ExperimentResult(experiment="diagonal", stats=_new_stats("diagonal"))
    checks = result.extra.setdefault("checks", {})

    try:
        for s in s_values:
            first = len(result.reports)
            lower_ok = True

            def count_at(X: int, s: int = s) -> List[CountReport]:
                nonlocal lower_ok
                report = count_sliced(s, k, r, X, threads=threads, capacity=capacity)
                lower = diagonal_count(s, X)
                report.extra["diagonal_count"] = str(lower)
                lower_ok = lower_ok and report.count >= lower
                return [report]

            _run_grid(result, X_grid, count_at, time_budget_s)
            checks[f"diagonal_lower_bound_s{s}"] = lower_ok
            _fit_reports(result, result.reports[first:], s, tolerance, f"slope_within_target_s{s}")
    finally:
        _finish(result, start)
    return result


def u2_probe(
    s: int,
    k: int,
    r: int,
    kappa: int,
    X_grid: Sequence[int] = DEFAULT_GRID,
    tolerance: float = DEFAULT_TOLERANCE,
    threads: int = 1,
    capacity: int = DEFAULT_CAPACITY,
    time_budget_s: Optional[float] = None,
) -> ExperimentResult:
    """U_2 frente a su cota ``J_{q,r-1}(2X) * A_{kappa,r}`` y a su exponente."""
    start = time.time()
    result = ExperimentResult(experiment="u2", stats=_new_stats("u2"))
    target = float(bound_calculator(s, k, r, kappa).targets["u2_exponent"])
    bound_ok = True

    def count_at(X: int) -> List[CountReport]:
        nonlocal bound_ok
        report = count_u2(s, k, r, kappa, X, threads=threads, capacity=capacity)
        upper = u2_upper_bound(s, k, r, kappa, X, threads=threads, capacity=capacity)
        report.extra["upper_bound"] = str(upper)
        bound_ok = bound_ok and report.count <= upper
        return [report]

    try:
        _run_grid(result, X_grid, count_at, time_budget_s)
        result.extra["target"] = target
        result.extra.setdefault("checks", {})["u2_upper_bound"] = bound_ok
        _fit_reports(result, result.reports, target, tolerance, "slope_within_target")
    finally:
        _finish(result, start)
    return result


def classification_fit(
    f: WellConditionedTuple,
    s: int,
    r: int,
    X_grid: Sequence[int] = DEFAULT_GRID,
    H: Optional[int] = None,
    tolerance: float = DEFAULT_TOLERANCE,
    threads: int = 1,
    seed: int = 0,
    cache: Optional[PsiCache] = None,
    time_budget_s: Optional[float] = None,
) -> ExperimentResult:
    """
    Histograma de tipos por X y ajuste del exponente de cada tipo.

    Los tipos que no aparecen en todos los X de la rejilla no se ajustan.
    """
    start = time.time()
    result = ExperimentResult(experiment="classification", stats=_new_stats("classification"))
    g = f.prefix(2 * s - 1) if f.t > 2 * s - 1 else f
    classifier = SolutionClassifier(g, s, seed=seed, cache=cache)
    histograms: Dict[int, Dict[str, int]] = {}
    targets = class_exponent_targets(s, r)

    def count_at(X: int) -> List[CountReport]:
        bound = X**r if H is None else H
        solutions = enumerate_aux_solutions(g, s, X, bound)
        summary = classify_all(solutions, g, s, threads=threads, classifier=classifier)
        histograms[X] = summary.histogram
        return [
            CountReport(
                system="aux",
                count=len(solutions),
                method="mitm",
                s=s,
                k=g.degrees[0] + r,
                r=r,
                t=g.t,
                X=X,
                H=bound,
                extra={"histogram": dict(summary.histogram)},
            )
        ]

    try:
        done = _run_grid(result, X_grid, count_at, time_budget_s)
        result.extra["histograms"] = {str(X): histograms[X] for X in done}
        for name, target in targets.items():
            points = [(X, histograms[X].get(name, 0)) for X in done]
            if len(points) < 2 or any(count == 0 for _, count in points):
                continue
            class_result = [
                CountReport(system="aux", count=count, method="mitm", X=X) for X, count in points
            ]
            _fit_reports(
                result,
                class_result,
                target,
                tolerance,
                f"slope_within_target_{name}",
                name=f"classification:{name}",
            )
        result.extra["class_exponent_targets"] = dict(targets)
        result.extra["fitted_exponents"] = {
            fit.experiment.split(":", 1)[1]: fit.slope for fit in result.fits
        }
    finally:
        _finish(result, start)
    return result
