"""
Tests del logging compartido.
"""

import logging

from vinoslice.utils.logging import LogConfig, get_logger, setup_logging


def test_child_names():
    assert get_logger("counting.repmap").name == "vinoslice.counting.repmap"
    assert get_logger("vinoslice.cli").name == "vinoslice.cli"
    assert get_logger().name == "vinoslice"


def test_level_is_normalized():
    assert LogConfig(level="debug").level == "DEBUG"  # type: ignore[arg-type]
    assert LogConfig(level="verbose").level == "INFO"  # type: ignore[arg-type]


def test_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("VINOSLICE_LOG_LEVEL", "warning")
    monkeypatch.setenv("VINOSLICE_LOG_FILE", str(tmp_path / "run.log"))
    monkeypatch.setenv("VINOSLICE_LOG_CONSOLE", "0")
    config = LogConfig.from_env()
    assert config.level == "WARNING"
    assert config.log_file == str(tmp_path / "run.log")
    assert not config.console


def test_file_handler_creates_directory(tmp_path):
    log_file = tmp_path / "logs" / "vinoslice.log"
    logger = setup_logging("vinoslice_test.file", LogConfig(log_file=str(log_file), console=False))
    logger.info("conteo terminado")
    for handler in logger.handlers:
        handler.flush()
    assert "conteo terminado" in log_file.read_text(encoding="utf-8")
    setup_logging("vinoslice_test.file", LogConfig(console=False))


def test_reconfiguring_does_not_duplicate_handlers():
    name = "vinoslice_test.repeat"
    setup_logging(name, LogConfig(level="ERROR"))
    logger = setup_logging(name, LogConfig(level="ERROR"))
    assert len(logger.handlers) == 1
    assert logger.level == logging.ERROR
