"""Logging for the ``charclass`` logger tree."""

import logging
import sys
from pathlib import Path
from typing import Optional

ROOT_LOGGER = "charclass"
LOG_FORMAT = "%(asctime)s | %(name)s | %(levelname)-8s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _attach(logger: logging.Logger, handler: logging.Handler, level: int) -> None:
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
    logger.addHandler(handler)


def configure_logging(
    log_level: str = "WARNING",
    log_file: Optional[Path] = None,
    enable_console: bool = True,
) -> None:
    """
    (Re)configure the ``charclass`` logger.

    Console output goes to stderr; stdout carries command results. Handlers
    from an earlier call are closed and replaced.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional path to log file; parent directories are created
        enable_console: Whether to log to stderr
    """
    logger = logging.getLogger(ROOT_LOGGER)
    level = logging.getLevelName(log_level.upper())
    if not isinstance(level, int):
        raise ValueError(f"unknown log level {log_level!r}")
    logger.setLevel(level)

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    if enable_console:
        _attach(logger, logging.StreamHandler(sys.stderr), level)
    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        _attach(logger, logging.FileHandler(log_file, encoding="utf-8"), level)

    logger.propagate = False


def get_logger(name: str) -> logging.Logger:
    """Logger below the ``charclass`` root; module names already under it are kept."""
    if name == ROOT_LOGGER or name.startswith(ROOT_LOGGER + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
