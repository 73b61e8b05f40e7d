"""Logging configuration for charclass."""

from charclass.logging.config import configure_logging, get_logger

__all__ = ["configure_logging", "get_logger"]
