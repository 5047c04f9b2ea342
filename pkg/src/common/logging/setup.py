"""Structured logging setup using structlog."""

import logging
import sys
from typing import Any, Optional, TextIO

import numpy as np
import structlog


def _numeric_values(_: Any, __: str, event_dict: dict[str, Any]) -> dict[str, Any]:
    """Render numpy scalars and complex numbers as JSON-friendly values."""
    for key, value in event_dict.items():
        if isinstance(value, np.generic):
            value = value.item()
        if isinstance(value, complex):
            value = [value.real, value.imag]
        event_dict[key] = value
    return event_dict


def _stream(output: str) -> TextIO:
    if output == "stdout":
        return sys.stdout
    if output == "stderr":
        return sys.stderr
    return open(output, "a", encoding="utf-8")  # noqa: SIM115 - lives as long as the logger


def setup_logging(
    level: str = "INFO",
    format_type: str = "json",
    output: str = "stderr",
) -> structlog.BoundLogger:
    """Setup structured logging with structlog.

    Reports are written to stdout by the CLI, so logs default to stderr.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format_type: Output format ('json' or 'console')
        output: Output destination ('stdout', 'stderr', or file path)

    Returns:
        A configured structlog logger
    """
    log_level = getattr(logging, level.upper(), logging.INFO)
    stream = _stream(output)

    processors: list[Any] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        _numeric_values,
    ]

    if format_type == "json":
        processors.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=stream.isatty()))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(log_level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=stream),
        cache_logger_on_first_use=False,
    )

    logging.basicConfig(format="%(message)s", stream=stream, level=log_level)

    return structlog.get_logger()


def get_logger(name: Optional[str] = None, **initial_context: Any) -> structlog.BoundLogger:
    """Get a configured logger instance.

    Args:
        name: Optional logger name
        **initial_context: Initial context to bind to the logger

    Returns:
        A configured structlog logger
    """
    logger = structlog.get_logger(name) if name else structlog.get_logger()

    if initial_context:
        return logger.bind(**initial_context)

    return logger


def bind_run_context(**context: Any) -> None:
    """Attach context (command, surface, grid) to every log line of the current run."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**context)
