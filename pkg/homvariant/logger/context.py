"""
Run context propagation for structured logs.

Every entry written during one CLI invocation carries the same run_id; survey
workers add graph_id so rows can be told apart in interleaved output. Both
live in contextvars and are merged into entries by inject_run_context.

USAGE:
    from homvariant.logger import logger
    from homvariant.logger.context import with_run_context, set_extra_context

    with with_run_context():
        set_extra_context(graph_id="Bw")
        logger.info("Row started")   # carries run_id and graph_id
"""

from __future__ import annotations

import contextvars
import uuid
from typing import Any

# =============================================================================
# CONTEXT VARIABLES
# =============================================================================

# The run ID for the current invocation
_run_id: contextvars.ContextVar[str | None] = contextvars.ContextVar(
    "run_id",
    default=None,
)

# Additional context fields (graph_id, subcommand, ...)
_extra_context: contextvars.ContextVar[dict[str, Any]] = contextvars.ContextVar(
    "extra_context",
    default={},
)


# =============================================================================
# CONTEXT GETTERS AND SETTERS
# =============================================================================


def get_run_id() -> str | None:
    """
    Get the current run ID.

    Returns:
        The run ID if set, None otherwise.
    """
    return _run_id.get()


def set_run_id(run_id: str) -> None:
    """
    Set the run ID for the current context.

    Args:
        run_id: The run ID to set
    """
    _run_id.set(run_id)


def generate_run_id() -> str:
    """
    Generate a new unique run ID.

    Returns:
        uuid4 text, 36 characters
    """
    return str(uuid.uuid4())


def get_extra_context() -> dict[str, Any]:
    """Get a copy of all extra context fields."""
    return _extra_context.get().copy()


def set_extra_context(**kwargs: Any) -> None:
    """
    Set extra context fields for the current run.

    These fields will be included in all logs for this run.

    Example:
        set_extra_context(subcommand="survey", max_n=5)
    """
    current = _extra_context.get().copy()
    current.update(kwargs)
    _extra_context.set(current)


def clear_context() -> None:
    """Clear all context for the current run."""
    _run_id.set(None)
    _extra_context.set({})


# =============================================================================
# STRUCTLOG PROCESSOR
# =============================================================================


def inject_run_context(
    logger: Any,
    method_name: str,
    event_dict: dict[str, Any],
) -> dict[str, Any]:
    """
    Structlog processor that injects run context into logs.

    Adds run_id and every field bound with set_extra_context().

    Explicit fields passed to the log call are never overwritten.
    """
    run_id = get_run_id()
    if run_id:
        event_dict.setdefault("run_id", run_id)

    for key, value in get_extra_context().items():
        if key not in event_dict:
            event_dict[key] = value

    return event_dict


# =============================================================================
# CONTEXT MANAGER
# =============================================================================


class RunContext:
    """
    Context manager that opens a run context and restores the enclosing one on exit.

    USAGE:
        with with_run_context("survey-2026-10") as run_id:
            logger.info("Survey started")
    """

    def __init__(self, run_id: str | None = None, **extra: Any) -> None:
        self.run_id = run_id or generate_run_id()
        self.extra = extra

    def __enter__(self) -> str:
        self._outer = (get_run_id(), get_extra_context())
        set_run_id(self.run_id)
        if self.extra:
            set_extra_context(**self.extra)
        return self.run_id

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        # Survey rows nest inside the CLI run context.
        outer_run_id, outer_extra = self._outer
        _run_id.set(outer_run_id)
        _extra_context.set(outer_extra)
        return False


def with_run_context(run_id: str | None = None, **extra: Any) -> RunContext:
    """
    Open a run context (generated run_id if none is given).

    Args:
        run_id: The run ID to use (generated if None)
        **extra: Extra fields bound for the duration of the run
    """
    return RunContext(run_id, **extra)
