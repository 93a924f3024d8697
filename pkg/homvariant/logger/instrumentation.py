"""
Computation instrumentation helpers for Datadog APM.
"""

from __future__ import annotations

import functools
import os
import time
from typing import Any, Callable

try:
    from ddtrace import tracer

    DDTRACE_AVAILABLE = True
except ImportError:
    tracer = None
    DDTRACE_AVAILABLE = False

from .structured_logger import logger


class InstrumentationConfig:
    def __init__(self, enabled_types: set[str] | None = None) -> None:
        if enabled_types is None:
            raw = os.getenv("HOMVARIANT_TRACE_TYPES", "engine,lab")
            enabled_types = {item.strip() for item in raw.split(",") if item.strip()}
        self.enabled_types = enabled_types

    def is_enabled(self, instrumentation_type: str) -> bool:
        return "*" in self.enabled_types or instrumentation_type in self.enabled_types


DEFAULT_INSTRUMENTATION = InstrumentationConfig()


def trace_computation(
    operation_name: str,
    instrumentation_type: str = "engine",
    config: InstrumentationConfig | None = None,
):
    """
    Decorator to time an expensive computation and trace it with Datadog APM.

    Logs computation_completed / computation_failed with duration_ms. The
    wrapped function's exceptions are re-raised unchanged.
    """
    config = config or DEFAULT_INSTRUMENTATION

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            if not config.is_enabled(instrumentation_type):
                return func(*args, **kwargs)

            start_time = time.monotonic()
            service = os.getenv("DD_SERVICE", "homvariant")
            if DDTRACE_AVAILABLE and tracer:
                with tracer.trace(operation_name, service=service) as span:
                    span.set_tag("span.kind", instrumentation_type)
                    span.set_tag("computation.operation", operation_name)
                    try:
                        result = func(*args, **kwargs)
                    except Exception as e:
                        duration_ms = round((time.monotonic() - start_time) * 1000, 2)
                        span.set_tag("error", True)
                        span.set_tag("error.type", type(e).__name__)
                        span.set_tag("error.message", str(e))
                        span.set_tag("computation.duration_ms", duration_ms)
                        _log_failure(operation_name, duration_ms, e)
                        raise
                    duration_ms = round((time.monotonic() - start_time) * 1000, 2)
                    span.set_tag("computation.duration_ms", duration_ms)
                    _log_success(operation_name, duration_ms)
                    return result

            try:
                result = func(*args, **kwargs)
            except Exception as e:
                _log_failure(operation_name, round((time.monotonic() - start_time) * 1000, 2), e)
                raise
            _log_success(operation_name, round((time.monotonic() - start_time) * 1000, 2))
            return result

        return wrapper

    return decorator


def _log_success(operation_name: str, duration_ms: float) -> None:
    try:
        logger.debug(
            "computation_completed",
            operation=operation_name,
            duration_ms=duration_ms,
        )
    except Exception:
        pass


def _log_failure(operation_name: str, duration_ms: float, error: Exception) -> None:
    try:
        logger.warning(
            "computation_failed",
            operation=operation_name,
            duration_ms=duration_ms,
            error_type=type(error).__name__,
            error_message=str(error),
        )
    except Exception:
        pass
