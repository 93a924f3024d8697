"""
Structured logging for homvariant.

USAGE:
    from homvariant.logger import logger
    logger.info("Rank test finished", target="K3", k=2, rank=2)

HOW IT WORKS:
    1. Logs are formatted as JSON (or a console layout) using structlog
    2. Logs go to stderr; stdout carries computation results only
    3. Datadog trace IDs are automatically injected (if ddtrace is installed)
    4. The current run context (run_id, graph_id, ...) is added to every entry

LAZY INITIALIZATION:
    - Logger is configured on first use, not on import
    - Survey worker processes are spawned and call configure_logging() from
      their pool initializer with the parent's active_logging_options()
"""

from __future__ import annotations

import atexit
import logging
import os
import sys
import threading
from logging.handlers import QueueHandler, QueueListener
from queue import Queue
from typing import Any

import structlog

# =============================================================================
# OPTIONAL TRACING
# =============================================================================

# Span ids reach log entries only when ddtrace is importable
try:
    from ddtrace import tracer
    DDTRACE_AVAILABLE = True
except ImportError:
    tracer = None
    DDTRACE_AVAILABLE = False


# =============================================================================
# ENVIRONMENT
# =============================================================================

# Log level: DEBUG, INFO, WARNING, ERROR, CRITICAL
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

# Output layout: "json" (default) or "console"
LOG_FORMAT = os.getenv("LOG_FORMAT", "json").lower()

# Service tag attached to every entry
SERVICE_NAME = os.getenv("DD_SERVICE", "homvariant")


# =============================================================================
# MODULE STATE
# =============================================================================

_logger_instance: structlog.stdlib.BoundLogger | None = None

_logger_lock = threading.Lock()

_is_configured = False

_active_options: dict[str, str] = {}


# =============================================================================
# PROCESSORS
# =============================================================================


def add_datadog_trace_context(
    logger_instance: Any,
    method_name: str,
    event_dict: dict[str, Any],
) -> dict[str, Any]:
    """
    Copy the active span's dd.trace_id/dd.span_id onto the entry.

    Only computations wrapped by trace_computation() have a span, so a slow
    survey row can be matched with its trace.
    """
    if not DDTRACE_AVAILABLE or tracer is None:
        return event_dict

    try:
        trace_context = tracer.get_log_correlation_context()
        if trace_context:
            event_dict.update(trace_context)
    except Exception:
        # correlation is best effort
        pass

    return event_dict


def stringify_rationals(
    logger_instance: Any,
    method_name: str,
    event_dict: dict[str, Any],
) -> dict[str, Any]:
    """
    Render exact values (Fraction and friends) as "p/q" strings.

    JSONRenderer would otherwise fall back to repr() for them.
    """
    for key, value in list(event_dict.items()):
        if hasattr(value, "denominator") and not isinstance(value, (int, bool)):
            event_dict[key] = str(value)
    return event_dict


# =============================================================================
# CONFIGURATION
# =============================================================================


def configure_logging(
    *,
    level: str | None = None,
    log_format: str | None = None,
    stream: Any = None,
    queued: bool = True,
) -> structlog.stdlib.BoundLogger:
    """
    Route structlog entries to stderr and return the service logger.

    Later calls return the logger built by the first one; arguments passed
    after that are ignored.

    Args:
        level: Level name; LOG_LEVEL otherwise
        log_format: "json" or "console"; LOG_FORMAT otherwise
        stream: Destination, sys.stderr when omitted
        queued: Write through a QueueListener thread. Worker processes exit
            without running atexit hooks and pass False

    Example:
        configure_logging(level="DEBUG", log_format="console")
    """
    global _logger_instance, _is_configured, _active_options

    # configured once per process
    if _is_configured and _logger_instance is not None:
        return _logger_instance

    with _logger_lock:
        if _is_configured and _logger_instance is not None:
            return _logger_instance

        # explicit arguments win over the environment
        resolved_level_name = (level or LOG_LEVEL).upper()
        resolved_level = getattr(logging, resolved_level_name, logging.INFO)
        resolved_format = (log_format or LOG_FORMAT).lower()

        console_handler = logging.StreamHandler(stream or sys.stderr)
        console_handler.setLevel(resolved_level)

        root_handler: logging.Handler = console_handler
        if queued:
            # stderr writes happen on the listener thread
            log_queue: Queue[logging.LogRecord] = Queue(maxsize=1000)
            root_handler = QueueHandler(log_queue)
            queue_listener = QueueListener(
                log_queue,
                console_handler,
                respect_handler_level=True,
            )
            queue_listener.start()
            atexit.register(queue_listener.stop)

        logging.basicConfig(
            level=resolved_level,
            format="%(message)s",
            handlers=[root_handler],
            force=True,
        )

        from homvariant.logger.context import inject_run_context

        renderer: Any
        if resolved_format == "console":
            renderer = structlog.dev.ConsoleRenderer(colors=False)
        else:
            renderer = structlog.processors.JSONRenderer(sort_keys=True)

        structlog.configure(
            processors=[
                structlog.stdlib.filter_by_level,
                structlog.processors.add_log_level,
                structlog.processors.TimeStamper(fmt="iso"),
                inject_run_context,
                add_datadog_trace_context,
                stringify_rationals,
                structlog.processors.StackInfoRenderer(),
                structlog.processors.format_exc_info,
                structlog.processors.UnicodeDecoder(),
                structlog.processors.EventRenamer("msg"),
                renderer,
            ],
            wrapper_class=structlog.stdlib.BoundLogger,
            context_class=dict,
            logger_factory=structlog.stdlib.LoggerFactory(),
            cache_logger_on_first_use=True,
        )

        _active_options = {"level": resolved_level_name, "log_format": resolved_format}
        _is_configured = True
        _logger_instance = structlog.get_logger(SERVICE_NAME)

        return _logger_instance


def active_logging_options() -> dict[str, str]:
    """Level and format chosen by the first configure_logging() call; empty before it."""
    return dict(_active_options)


# =============================================================================
# MODULE LOGGER
# =============================================================================


class LazyLoggerProxy:
    """
    Module-level logger that configures logging on its first attribute access.

    Importing homvariant installs no handlers; the CLI sets LOG_LEVEL before
    the first entry is written.
    """

    def __getattr__(self, attribute_name: str) -> Any:
        real_logger = configure_logging()
        return getattr(real_logger, attribute_name)


logger = LazyLoggerProxy()
