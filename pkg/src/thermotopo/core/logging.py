"""
Thermotopo - Structured Logging Configuration
"""

import logging
import sys
from typing import Any, Dict

import numpy as np
import structlog

from thermotopo.core.config import settings


def setup_logging(verbose: bool = False) -> None:
    """
    Configure structured logging with structlog.

    Args:
        verbose: Log at DEBUG regardless of APP_DEBUG
    """

    log_level = logging.DEBUG if verbose or settings.APP_DEBUG else logging.INFO

    # stderr keeps stdout free for command payloads
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=log_level,
        force=True,
    )

    shared_processors = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.UnicodeDecoder(),
        array_summary_processor,
    ]

    if settings.APP_ENV == "development":
        processors = shared_processors + [
            structlog.dev.ConsoleRenderer(colors=True),
        ]
    else:
        processors = shared_processors + [
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(),
        ]

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def array_summary_processor(
    logger: Any, method_name: str, event_dict: Dict[str, Any]
) -> Dict[str, Any]:
    """Replace numpy arrays in log events by a shape/dtype summary."""

    for key, value in list(event_dict.items()):
        if isinstance(value, np.ndarray):
            if value.size <= 8:
                event_dict[key] = value.tolist()
            else:
                event_dict[key] = f"array(shape={value.shape}, dtype={value.dtype})"
        elif isinstance(value, np.generic):
            event_dict[key] = value.item()
        if isinstance(event_dict[key], complex):
            z = event_dict[key]
            event_dict[key] = [z.real, z.imag]

    return event_dict
