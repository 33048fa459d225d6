"""
Logging de vinoslice.

Todos los módulos registran a través de hijos del logger ``vinoslice``. Los
handlers se instalan solo en la raíz; la consola escribe en stderr porque
stdout transporta los informes JSON/CSV.
"""

import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Literal, Optional

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

ROOT_LOGGER = "vinoslice"
ENV_PREFIX = "VINOSLICE_LOG_"
DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class LogConfig:
    """
    Configuración de logging.

    Attributes:
        level: Nivel mínimo; un nivel desconocido se trata como INFO
        log_file: Archivo de log (opcional, se crea su directorio)
        console: Si se escribe también en stderr
        format: Formato de los mensajes
    """

    level: LogLevel = "INFO"
    log_file: Optional[str] = None
    console: bool = True
    format: str = DEFAULT_FORMAT

    def __post_init__(self) -> None:
        level = str(self.level).upper()
        self.level = level if level in LEVELS else "INFO"  # type: ignore[assignment]

    @classmethod
    def from_env(cls) -> "LogConfig":
        """Lee VINOSLICE_LOG_LEVEL, VINOSLICE_LOG_FILE y VINOSLICE_LOG_CONSOLE."""
        return cls(
            level=os.getenv(f"{ENV_PREFIX}LEVEL", "INFO"),  # type: ignore[arg-type]
            log_file=os.getenv(f"{ENV_PREFIX}FILE") or None,
            console=os.getenv(f"{ENV_PREFIX}CONSOLE", "1") == "1",
        )


def _build_handlers(config: LogConfig) -> List[logging.Handler]:
    handlers: List[logging.Handler] = []
    if config.console:
        handlers.append(logging.StreamHandler(sys.stderr))
    if config.log_file:
        Path(config.log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(config.log_file, encoding="utf-8"))
    return handlers


def setup_logging(
    name: str = ROOT_LOGGER, config: Optional[LogConfig] = None
) -> logging.Logger:
    """
    Reinstala los handlers de un logger según ``config``.

    Los handlers anteriores se cierran, así que llamar varias veces (una por
    ejecución de la CLI en los tests, por ejemplo) no duplica mensajes.

    Args:
        name: Nombre del logger
        config: Configuración (por defecto LogConfig())

    Returns:
        logging.Logger: Logger configurado
    """
    config = config or LogConfig()
    logger = logging.getLogger(name)
    logger.setLevel(config.level)

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(config.format)
    for handler in _build_handlers(config):
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Logger ``vinoslice.<name>``, o la raíz si no se da nombre.

    Args:
        name: Submódulo, p. ej. ``"counting.repmap"``

    Returns:
        logging.Logger: Logger hijo de la raíz
    """
    if not name:
        return logging.getLogger(ROOT_LOGGER)
    if name == ROOT_LOGGER or name.startswith(f"{ROOT_LOGGER}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def configure_from_env() -> logging.Logger:
    """Configura la raíz desde las variables ``VINOSLICE_LOG_*``."""
    return setup_logging(config=LogConfig.from_env())
