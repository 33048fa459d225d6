"""
Emisión y lectura de informes en JSON y CSV.

Los conteos se serializan siempre como cadenas decimales: superan 2^53 con
rapidez y no deben pasar por un float.
"""

import csv
import io
import json
import sys
from dataclasses import is_dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

from ..models import BoundParams, CountReport, ExperimentResult, FitResult
from ..utils.logging import get_logger
from .errors import ReportFormatError, ReportWriteError

logger = get_logger("harness.report")

SCHEMA_VERSION = 1
REPORT_FORMATS = ("json", "csv")
CSV_COLUMNS = ["experiment", "s", "k", "r", "t", "X", "H", "count", "method", "elapsed_s"]

# Nombre de tipo por clase con as_dict()
_TYPE_NAMES = {
    "PsiResult": "psi",
    "PhiResult": "phi",
    "BlockDet": "det",
    "ThetaResult": "theta",
    "IdentityReport": "identities",
    "ClassificationSummary": "classification",
    "DivisibilityDiagnostic": "divisibility",
    "BoundCheck": "root_count",
}


def _count_entry(report: CountReport) -> Dict[str, Any]:
    return {
        "type": "count",
        "experiment": report.experiment,
        "system": report.system,
        **report.params,
        "count": str(report.count),
        "method": report.method,
        "elapsed_s": report.elapsed_s,
        "extra": dict(report.extra),
    }


def _fit_entry(fit: FitResult) -> Dict[str, Any]:
    return {
        "type": "fit",
        "experiment": fit.experiment,
        "points": [[x, str(count)] for x, count in fit.points],
        "slope": fit.slope,
        "intercept": fit.intercept,
        "max_residual": fit.max_residual,
        "target": fit.target,
        "within": fit.within(),
    }


def _flatten(results: Iterable[Any]) -> List[Any]:
    flat: List[Any] = []
    for item in results:
        if isinstance(item, ExperimentResult):
            flat.extend(item.reports)
            flat.extend(item.fits)
            flat.append(item)
        else:
            flat.append(item)
    return flat


def to_entry(item: Any) -> Dict[str, Any]:
    """
    Convierte un resultado en una entrada con discriminador ``type``.

    Args:
        item: CountReport, FitResult, BoundParams, ExperimentResult, un registro
            con ``as_dict()`` o un diccionario que ya tenga ``type``

    Returns:
        Dict[str, Any]: Entrada serializable
    """
    if isinstance(item, CountReport):
        return _count_entry(item)
    if isinstance(item, FitResult):
        return _fit_entry(item)
    if isinstance(item, BoundParams):
        return {"type": "bounds", **item.as_dict()}
    if isinstance(item, ExperimentResult):
        return {
            "type": "experiment",
            "experiment": item.experiment,
            "stats": dict(item.stats),
            "extra": item.extra,
            "ok": item.ok,
        }
    if isinstance(item, dict) and "type" in item:
        return dict(item)
    type_name = _TYPE_NAMES.get(type(item).__name__)
    if type_name is not None and hasattr(item, "as_dict"):
        return {"type": type_name, **item.as_dict()}
    if type_name is not None and hasattr(item, "_asdict"):
        return {"type": type_name, **item._asdict()}
    raise ReportFormatError("json", f"Resultado no serializable: {type(item).__name__}")


def _json_default(value: Any) -> Any:
    if is_dataclass(value) and hasattr(value, "as_dict"):
        return value.as_dict()
    return str(value)


def _emit_json(entries: List[Dict[str, Any]]) -> str:
    payload = {"schema_version": SCHEMA_VERSION, "entries": entries}
    return json.dumps(payload, indent=2, ensure_ascii=False, default=_json_default) + "\n"


def _emit_csv(items: List[Any]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    skipped = 0
    for item in items:
        if not isinstance(item, CountReport):
            skipped += 1
            continue
        writer.writerow(
            [
                item.experiment,
                *("" if value is None else value for value in item.params.values()),
                item.count,
                item.method,
                f"{item.elapsed_s:.6f}",
            ]
        )
    if skipped:
        logger.debug(f"CSV: {skipped} resultados sin fila de conteo omitidos")
    return buffer.getvalue()


def emit_report(results: Iterable[Any], fmt: str = "json") -> str:
    """
    Serializa resultados de forma determinista.

    Args:
        results: Resultados a emitir (los ExperimentResult se expanden)
        fmt: "json" o "csv"

    Returns:
        str: Informe serializado

    Raises:
        ReportFormatError: Si el formato no está soportado
    """
    if fmt not in REPORT_FORMATS:
        raise ReportFormatError(fmt)
    items = _flatten(results)
    if fmt == "csv":
        return _emit_csv(items)
    return _emit_json([to_entry(item) for item in items])


def _parse_count_entry(entry: Dict[str, Any]) -> Dict[str, Any]:
    parsed = dict(entry)
    parsed["count"] = int(entry["count"])
    return parsed


def parse_report(text: str) -> List[Dict[str, Any]]:
    """
    Lee un informe JSON emitido por :func:`emit_report`.

    Args:
        text: Contenido del informe

    Returns:
        List[Dict[str, Any]]: Entradas, con los conteos como enteros exactos

    Raises:
        ReportFormatError: Si el informe no es válido
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ReportFormatError("json", f"Informe JSON inválido: {e}") from e
    if not isinstance(payload, dict) or payload.get("schema_version") != SCHEMA_VERSION:
        raise ReportFormatError("json", "Versión de esquema ausente o no soportada")

    entries = []
    for entry in payload.get("entries", []):
        if entry.get("type") == "count":
            entry = _parse_count_entry(entry)
        elif entry.get("type") == "fit":
            entry = dict(entry)
            entry["points"] = [(int(x), int(count)) for x, count in entry["points"]]
        entries.append(entry)
    return entries


def count_reports(entries: Iterable[Dict[str, Any]]) -> List[CountReport]:
    """Reconstruye los CountReport de las entradas de tipo ``count``."""
    reports = []
    for entry in entries:
        if entry.get("type") != "count":
            continue
        reports.append(
            CountReport(
                system=entry["system"],
                count=int(entry["count"]),
                method=entry["method"],
                elapsed_s=float(entry.get("elapsed_s", 0.0)),
                s=entry.get("s"),
                k=entry.get("k"),
                r=entry.get("r"),
                t=entry.get("t"),
                X=entry.get("X"),
                H=entry.get("H"),
                experiment=entry.get("experiment", ""),
                extra=entry.get("extra", {}),
            )
        )
    return reports


def write_report(text: str, out: Optional[Union[str, Path]] = None) -> None:
    """
    Escribe el informe en un archivo o en stdout.

    Raises:
        ReportWriteError: Si no se puede escribir el archivo
    """
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ReportWriteError(f"No se pudo escribir el informe en {path}: {e}") from e
    logger.info(f"Informe guardado en {path}")
