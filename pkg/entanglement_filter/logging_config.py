"""Structured logging setup. Logs go to stderr; stdout carries CSV/JSON output."""

import logging
import sys

import structlog

from entanglement_filter.exceptions import ContractViolationError

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def configure_logging(level: str = "WARNING", json_output: bool = False) -> None:
    """Configure structlog for the whole process"""
    level = level.upper()
    if level not in LEVELS:
        raise ContractViolationError(f"unknown log level: {level}")
    renderer = (
        structlog.processors.JSONRenderer()
        if json_output
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(logging.getLevelName(level)),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


__all__ = ["LEVELS", "configure_logging"]
