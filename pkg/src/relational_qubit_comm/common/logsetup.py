"""structlog configuration for the command line."""

from __future__ import annotations

import logging
import sys

import structlog


def configure_logging(verbose: int = 0, json_logs: bool = False) -> None:
    """
    Route structlog output to standard error.

    Args:
        verbose: 0 for warnings, 1 for info, 2 or more for debug
        json_logs: Render events as JSON lines instead of console text
    """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    renderer: structlog.typing.Processor = (
        structlog.processors.JSONRenderer()
        if json_logs
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
