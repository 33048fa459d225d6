"""
Configuración de ejecución: valores por defecto, archivo key=value y flags.
"""

from pathlib import Path
from typing import Any, Dict, Literal, Mapping, Optional, Union

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field

from .counting.oracle import DEFAULT_CEILING
from .counting.repmap import DEFAULT_CAPACITY
from .utils.logging import get_logger

logger = get_logger("config")

ENV_PREFIX = "VINOSLICE_"


class RunConfig(BaseModel):
    """Opciones comunes a todos los subcomandos."""

    model_config = ConfigDict(extra="forbid")

    threads: int = Field(default=1, ge=1)
    format: Literal["json", "csv"] = "json"
    out: Optional[Path] = None
    seed: int = 0
    time_budget_s: Optional[float] = Field(default=None, gt=0)
    capacity: int = Field(default=DEFAULT_CAPACITY, ge=1)
    oracle_ceiling: int = Field(default=DEFAULT_CEILING, ge=1)
    psi_cache_dir: Path = Path(".vinoslice_cache")
    use_cache: bool = True
    log_level: str = "INFO"
    log_file: Optional[Path] = None


def _normalize_key(key: str) -> str:
    key = key.strip().lower()
    prefix = ENV_PREFIX.lower()
    if key.startswith(prefix):
        key = key[len(prefix):]
    return key.replace("-", "_")


def read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Lee un archivo key=value e ignora las claves desconocidas.

    Args:
        path: Ruta del archivo

    Returns:
        Dict[str, Any]: Valores con claves normalizadas

    Raises:
        FileNotFoundError: Si el archivo no existe
    """
    if not Path(path).is_file():
        raise FileNotFoundError(f"Archivo de configuración no encontrado: {path}")
    values: Dict[str, Any] = {}
    for key, value in dotenv_values(path).items():
        name = _normalize_key(key)
        if name not in RunConfig.model_fields:
            logger.warning(f"Clave de configuración desconocida ignorada: {key}")
            continue
        if value is None or value == "":
            continue
        values[name] = value
    logger.debug(f"Configuración leída de {path}: {sorted(values)}")
    return values


def load_config(
    path: Optional[Union[str, Path]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """
    Combina valores por defecto, archivo y flags, en ese orden de prioridad creciente.

    Args:
        path: Archivo key=value opcional
        overrides: Flags efectivamente indicados (los None se ignoran)

    Returns:
        RunConfig: Configuración validada

    Raises:
        pydantic.ValidationError: Si algún valor no es válido
    """
    values: Dict[str, Any] = {}
    if path is not None:
        values.update(read_config_file(path))
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
    return RunConfig(**values)
