"""
Interfaz de línea de comandos de vinoslice.
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from .algebra.errors import AlgebraError
from .classification.classify import SolutionClassifier, classify_all
from .classification.errors import ClassificationError
from .config import RunConfig, load_config
from .counting.counts import count_aux, count_lifted, count_sliced, count_u2, count_vmvt
from .counting.errors import CountingError
from .counting.oracle import SystemDescriptor, aux_solutions, brute_force_oracle
from .harness.bounds import bound_calculator
from .harness.errors import HarnessError, ParameterDomainError
from .harness.experiments import (
    DEFAULT_GRID,
    DEFAULT_TOLERANCE,
    aux_growth_probe,
    classification_fit,
    diagonal_probe,
    lifted_bound_probe,
    u2_probe,
)
from .harness.fit import fit_exponent
from .harness.report import emit_report, parse_report, write_report
from .identities.builtin import builtin_identities_check
from .identities.cache import PsiCache
from .identities.determinants import det_block, theta_factor
from .identities.errors import IdentityError
from .identities.psi import extract_phi, find_psi, phi_recombines
from .models import CountReport
from .systems.errors import TupleError
from .systems.tuples import (
    WellConditionedTuple,
    load_tuple_file,
    monomial_tuple,
    parse_tuple_text,
)
from .utils.logging import LogConfig, get_logger, setup_logging

logger = get_logger("cli")

DOMAIN_ERRORS = (
    AlgebraError,
    TupleError,
    CountingError,
    IdentityError,
    ClassificationError,
    HarnessError,
    ValidationError,
    OSError,
)

# Resultado de un subcomando: resultados a emitir y si todas las comprobaciones pasan
CommandResult = Tuple[List[Any], bool]
Handler = Callable[[argparse.Namespace, RunConfig, Optional[PsiCache]], CommandResult]


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Lista de enteros inválida: {text}")


def _common_parser(suppress: bool = False) -> argparse.ArgumentParser:
    """
    Flags globales, aceptados antes y después del subcomando.

    En los subparsers los valores por defecto se suprimen para no pisar los
    flags dados antes del subcomando.
    """
    default = argparse.SUPPRESS if suppress else None
    common = argparse.ArgumentParser(
        add_help=False, argument_default=default, allow_abbrev=False
    )
    group = common.add_argument_group("opciones globales")
    group.add_argument("--threads", type=int, help="Particiones en paralelo")
    group.add_argument("--format", choices=["json", "csv"], help="Formato del informe")
    group.add_argument("--out", help="Archivo de salida (por defecto: stdout)")
    group.add_argument("--seed", type=int, help="Semilla de las búsquedas aleatorias")
    group.add_argument("--time-budget-s", type=float, help="Presupuesto de tiempo por rejilla")
    group.add_argument("--config", help="Archivo de configuración key=value")
    group.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Nivel de logging",
    )
    group.add_argument("--log-file", help="Archivo de log")
    group.add_argument(
        "--no-cache", action="store_true", help="Desactivar caché de Psi"
    )
    group.add_argument(
        "--clear-cache", action="store_true", help="Limpiar la caché de Psi antes de empezar"
    )
    group.add_argument("--capacity", type=int, help="Máximo de claves por tabla")
    group.add_argument("--oracle-ceiling", type=int, help="Máximo de iteraciones del oráculo")
    return common


def _add_tuple_args(parser: argparse.ArgumentParser, required_kr: bool = False) -> None:
    parser.add_argument(
        "--tuple",
        help="Tupla en línea: coeficientes ascendentes por polinomio, separados por ';'",
    )
    parser.add_argument("--tuple-file", help="Archivo de tupla (un polinomio por línea)")
    parser.add_argument("--k", type=int, help="Grado máximo (tupla monomial si no hay --tuple)")
    parser.add_argument("--r", type=int, required=required_kr, help="Grado omitido")


def build_parser() -> argparse.ArgumentParser:
    """
    Construye el parser con todos los subcomandos.

    Returns:
        argparse.ArgumentParser: Parser principal
    """
    common = _common_parser()
    sub_common = _common_parser(suppress=True)
    parser = argparse.ArgumentParser(
        prog="vinoslice",
        description="Conteos exactos e identidades para sistemas de Vinogradov con una rebanada omitida",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        parents=[common],
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(
            name,
            help=help_text,
            parents=[sub_common],
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
            allow_abbrev=False,
        )

    p = add("count-i", "Conteo I_{s,k,r}(X)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--X", type=_int_list, required=True, help="Uno o varios X")
    p.add_argument("--oracle", action="store_true", help="Contrastar con fuerza bruta")
    p.add_argument(
        "--method",
        choices=["mitm", "naive"],
        default="mitm",
        help="Encuentro en el medio o enumeración exhaustiva",
    )

    p = add("count-a", "Conteo A_{s,r}(X; f)")
    _add_tuple_args(p, required_kr=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--X", type=_int_list, required=True)
    p.add_argument("--H", type=int, help="Cota de |h| (por defecto X^r)")
    p.add_argument("--oracle", action="store_true")

    p = add("count-j", "Valor medio completo J_{sigma,d}(X)")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--X", type=_int_list, required=True)
    p.add_argument("--oracle", action="store_true")

    p = add("count-lifted", "Conteo del sistema desplazado")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--X", type=_int_list, required=True)
    p.add_argument("--H", type=int, help="Cota de |h| (por defecto sX^r)")
    p.add_argument("--oracle", action="store_true")

    p = add("count-u2", "Valor medio U_2")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--X", type=_int_list, required=True)

    p = add("find-psi", "Busca Psi_n y extrae Phi_n")
    _add_tuple_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--cap",
        "--degree-cap",
        dest="degree_cap",
        type=int,
        help="Grado total máximo de la búsqueda",
    )

    add("verify-identities", "Comprueba las dos identidades explícitas")

    p = add("det-check", "Determinante de D_n y su expansión en menores")
    _add_tuple_args(p)
    p.add_argument("--n", type=int, required=True)

    p = add("theta", "Factor Theta de det(f_j(z_i))")
    _add_tuple_args(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--samples", type=int, default=5)

    p = add("classify", "Clasifica las soluciones del sistema auxiliar")
    _add_tuple_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument(
        "--X", type=_int_list, required=True, help="Un X o una rejilla para ajustar exponentes"
    )
    p.add_argument("--H", type=int, help="Cota de |h| (por defecto X^r)")
    p.add_argument("--labels", action="store_true", help="Incluir la etiqueta de cada solución")

    p = add("fit", "Ajuste de exponente")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--points", help="Pares X:count separados por comas")
    source.add_argument("--report", help="Informe JSON con conteos")
    p.add_argument("--target", type=float, help="Exponente esperado")

    p = add("bounds", "Exponentes y restricciones de parámetros")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kappa", type=int, default=1)
    p.add_argument("--t", type=int)
    p.add_argument("--degrees", type=_int_list)

    p = add("probe", "Experimentos sobre rejillas de X")
    p.add_argument("name", choices=["aux-growth", "lifted", "diagonal", "u2"])
    _add_tuple_args(p)
    p.add_argument("--s", type=_int_list, default=[2], help="Uno o varios s")
    p.add_argument("--kappa", type=int, default=1)
    p.add_argument("--grid", type=_int_list, default=list(DEFAULT_GRID))
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)

    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """
    Parsea los argumentos de línea de comandos.

    Returns:
        argparse.Namespace: Argumentos parseados
    """
    return build_parser().parse_args(argv)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Combina archivo de configuración y flags indicados."""
    overrides = {
        "threads": args.threads,
        "format": args.format,
        "out": args.out,
        "seed": args.seed,
        "time_budget_s": args.time_budget_s,
        "capacity": args.capacity,
        "oracle_ceiling": args.oracle_ceiling,
        "use_cache": False if args.no_cache else None,
        "log_level": args.log_level,
        "log_file": args.log_file,
    }
    return load_config(args.config, overrides)


def setup_logging_from_args(config: RunConfig) -> None:
    """
    Configura el logging según la configuración efectiva.

    Args:
        config: Configuración de la ejecución
    """
    log_config = LogConfig(
        level=config.log_level.upper(),  # type: ignore[arg-type]
        log_file=str(config.log_file) if config.log_file else None,
        console=True,
    )
    setup_logging(config=log_config)


def _resolve_tuple(
    args: argparse.Namespace, r_default: Optional[int] = None
) -> WellConditionedTuple:
    if args.tuple:
        return parse_tuple_text(args.tuple.replace(";", "\n"), "--tuple")
    if args.tuple_file:
        return load_tuple_file(args.tuple_file)
    r = args.r if args.r is not None else r_default
    if args.k is None or r is None:
        raise ParameterDomainError("tuple", None, "Indique --tuple, --tuple-file o --k y --r")
    return monomial_tuple(args.k, r)


def _check_oracle(
    report: CountReport, desc: SystemDescriptor, config: RunConfig
) -> bool:
    naive = brute_force_oracle(desc, ceiling=config.oracle_ceiling)
    report.extra["oracle"] = str(naive.count)
    if naive.count != report.count:
        logger.error(f"Discrepancia con el oráculo en X={desc.X}: {report.count} != {naive.count}")
        return False
    return True


def _count_grid(
    args: argparse.Namespace,
    config: RunConfig,
    count: Callable[[int], CountReport],
    descriptor: Optional[Callable[[int], SystemDescriptor]] = None,
) -> CommandResult:
    reports: List[Any] = []
    ok = True
    for X in args.X:
        report = count(X)
        report.experiment = args.command
        if getattr(args, "oracle", False) and descriptor is not None:
            ok = _check_oracle(report, descriptor(X), config) and ok
        reports.append(report)
    return reports, ok


def _cmd_count_i(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    def descriptor(X: int) -> SystemDescriptor:
        return SystemDescriptor(kind="sliced", s=args.s, X=X, k=args.k, r=args.r)

    def count(X: int) -> CountReport:
        if args.method == "naive":
            return brute_force_oracle(descriptor(X), ceiling=config.oracle_ceiling)
        return count_sliced(args.s, args.k, args.r, X, config.threads, config.capacity)

    return _count_grid(args, config, count, descriptor)


def _cmd_count_a(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    f = _resolve_tuple(args)
    return _count_grid(
        args,
        config,
        lambda X: count_aux(
            f, args.s, args.r, X, H=args.H, threads=config.threads, capacity=config.capacity
        ),
        lambda X: SystemDescriptor(kind="aux", s=args.s, X=X, r=args.r, H=args.H, f=f),
    )


def _cmd_count_j(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    return _count_grid(
        args,
        config,
        lambda X: count_vmvt(args.sigma, args.d, X, config.threads, config.capacity),
        lambda X: SystemDescriptor(kind="vmvt", s=args.sigma, X=X, k=args.d),
    )


def _cmd_count_lifted(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    return _count_grid(
        args,
        config,
        lambda X: count_lifted(
            args.s, args.k, args.r, X, H=args.H, threads=config.threads, capacity=config.capacity
        ),
        lambda X: SystemDescriptor(kind="lifted", s=args.s, X=X, k=args.k, r=args.r, H=args.H),
    )


def _cmd_count_u2(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    return _count_grid(
        args,
        config,
        lambda X: count_u2(args.s, args.k, args.r, args.kappa, X, config.threads, config.capacity),
    )


def _cmd_find_psi(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    f = _resolve_tuple(args)
    psi = find_psi(f, args.n, degree_cap=args.degree_cap, seed=config.seed, cache=cache)
    results: List[Any] = [psi]
    ok = psi.certified
    if args.n >= 1:
        phi = extract_phi(psi, f, args.n)
        recombines = phi_recombines(phi, psi, f)
        results.append(phi)
        results.append({"type": "phi_check", "recombines": recombines})
        ok = ok and recombines
    return results, ok


def _cmd_verify_identities(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    report = builtin_identities_check()
    return [report], report.ok


def _cmd_det_check(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    block = det_block(_resolve_tuple(args), args.n)
    return [block], block.expansion() == block.det


def _cmd_theta(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    result = theta_factor(_resolve_tuple(args), args.m, samples=args.samples)
    return [result], True


def _cmd_classify(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    f = _resolve_tuple(args)
    r = args.r if args.r is not None else 1
    if not args.X:
        raise ParameterDomainError("X", args.X, "Indique al menos un X")
    if len(args.X) > 1:
        result = classification_fit(
            f,
            args.s,
            r,
            args.X,
            H=args.H,
            threads=config.threads,
            seed=config.seed,
            cache=cache,
            time_budget_s=config.time_budget_s,
        )
        return [result], result.ok

    X = args.X[0]
    if f.t > 2 * args.s - 1:
        f = f.prefix(2 * args.s - 1)
    H = args.H if args.H is not None else X**r
    classifier = SolutionClassifier(f, args.s, seed=config.seed, cache=cache)
    solutions = aux_solutions(classifier.f, args.s, X, H, ceiling=config.oracle_ceiling)
    summary = classify_all(solutions, classifier.f, args.s, config.threads, classifier)
    verified = all(
        classifier.verify_witnesses(label, z, h)
        for label, (z, h) in zip(summary.labels, solutions)
    )
    entry: Dict[str, Any] = {
        "type": "classification",
        "s": args.s,
        "X": X,
        "H": H,
        "solutions": str(len(solutions)),
        "witnesses_verified": verified,
        **summary.as_dict(with_labels=args.labels),
    }
    return [entry], verified and summary.total == len(solutions)


def _parse_points(text: str) -> List[Tuple[int, int]]:
    points = []
    for item in text.replace(" ", "").split(","):
        if not item:
            continue
        try:
            X, count = item.split(":")
            points.append((int(X), int(count)))
        except ValueError:
            raise ParameterDomainError("points", item, f"Punto inválido (se espera X:count): {item}")
    return points


def _cmd_fit(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    if args.points:
        fit = fit_exponent(_parse_points(args.points), experiment="fit", target=args.target)
        return [fit], fit.within()

    entries = parse_report(Path(args.report).read_text(encoding="utf-8"))
    groups: Dict[Tuple[Any, ...], List[Tuple[int, int]]] = {}
    for entry in entries:
        if entry.get("type") != "count":
            continue
        key = (entry.get("experiment"), entry["system"], entry.get("s"), entry.get("k"), entry.get("r"))
        groups.setdefault(key, []).append((entry["X"], entry["count"]))
    fits = []
    for (experiment, system, s, k, r), points in groups.items():
        name = f"{experiment or system}:s={s},k={k},r={r}"
        fits.append(fit_exponent(sorted(points), experiment=name, target=args.target))
    if not fits:
        raise ParameterDomainError("report", args.report, "El informe no contiene conteos")
    return fits, all(fit.within() for fit in fits)


def _cmd_bounds(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    params = bound_calculator(args.s, args.k, args.r, args.kappa, t=args.t, degrees=args.degrees)
    return [params], True


def _cmd_probe(
    args: argparse.Namespace, config: RunConfig, cache: Optional[PsiCache]
) -> CommandResult:
    run = {
        "threads": config.threads,
        "capacity": config.capacity,
        "time_budget_s": config.time_budget_s,
    }
    s = args.s[0]
    if args.name == "aux-growth":
        r = args.r if args.r is not None else 1
        f = _resolve_tuple(args, r_default=r)
        result = aux_growth_probe(f, s, r, args.grid, tolerance=args.tolerance, **run)
    elif args.name in ("lifted", "diagonal", "u2"):
        if args.k is None or args.r is None:
            raise ParameterDomainError("k", args.k, f"El experimento {args.name} requiere --k y --r")
        if args.name == "lifted":
            result = lifted_bound_probe(s, args.k, args.r, args.grid, **run)
        elif args.name == "diagonal":
            result = diagonal_probe(args.s, args.k, args.r, args.grid, tolerance=args.tolerance, **run)
        else:
            result = u2_probe(s, args.k, args.r, args.kappa, args.grid, tolerance=args.tolerance, **run)
    return [result], result.ok


COMMANDS: Dict[str, Handler] = {
    "count-i": _cmd_count_i,
    "count-a": _cmd_count_a,
    "count-j": _cmd_count_j,
    "count-lifted": _cmd_count_lifted,
    "count-u2": _cmd_count_u2,
    "find-psi": _cmd_find_psi,
    "verify-identities": _cmd_verify_identities,
    "det-check": _cmd_det_check,
    "theta": _cmd_theta,
    "classify": _cmd_classify,
    "fit": _cmd_fit,
    "bounds": _cmd_bounds,
    "probe": _cmd_probe,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Función principal de la CLI.

    Args:
        argv: Argumentos (por defecto ``sys.argv[1:]``)

    Returns:
        int: Código de salida (0 éxito, 1 error de dominio, 130 interrupción)
    """
    args = parse_args(argv)

    try:
        config = config_from_args(args)
    except (ValidationError, OSError) as e:
        logger.error(f"Configuración inválida: {e}")
        return 1

    setup_logging_from_args(config)

    cache: Optional[PsiCache] = None
    if config.use_cache:
        cache = PsiCache(str(config.psi_cache_dir))
        if args.clear_cache:
            cache.clear()
            logger.info("Caché limpiada")

    try:
        results, ok = COMMANDS[args.command](args, config, cache)
        write_report(emit_report(results, config.format), config.out)
        if not ok:
            logger.error(f"{args.command}: alguna comprobación ha fallado")
        return 0 if ok else 1

    except KeyboardInterrupt:
        logger.info("Ejecución interrumpida por el usuario")
        return 130
    except DOMAIN_ERRORS as e:
        logger.error(f"Error: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
