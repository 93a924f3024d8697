"""
homvariant logger - Structured logging with run context and Datadog tracing.

BASIC USAGE:
    from homvariant.logger import logger
    logger.info("Tutte polynomial computed", edges=6, method="subset")

WITH RUN CONTEXT:
    from homvariant.logger import logger, with_run_context

    with with_run_context(subcommand="survey"):
        # run_id is automatically included in all logs
        logger.info("Survey started", max_n=5)

TRACING EXPENSIVE COMPUTATIONS:
    from homvariant.logger import trace_computation

    @trace_computation("hom_engine.invariant_rank")
    def invariant_rank(...):
        ...

ENVIRONMENT VARIABLES:
    LOG_LEVEL: Log level (default: INFO)
    LOG_FORMAT: json | console (default: json)
    DD_SERVICE: Service tag for traces (default: homvariant)
    HOMVARIANT_TRACE_TYPES: Instrumented computation types (default: engine,lab)
"""

from .context import (
    RunContext,
    clear_context,
    generate_run_id,
    get_extra_context,
    get_run_id,
    inject_run_context,
    set_extra_context,
    set_run_id,
    with_run_context,
)
from .instrumentation import (
    DEFAULT_INSTRUMENTATION,
    InstrumentationConfig,
    trace_computation,
)
from .structured_logger import active_logging_options, configure_logging, logger

__all__ = [
    # Main logger
    "logger",
    "configure_logging",
    "active_logging_options",
    # Run context
    "RunContext",
    "get_run_id",
    "set_run_id",
    "generate_run_id",
    "get_extra_context",
    "set_extra_context",
    "clear_context",
    "inject_run_context",
    "with_run_context",
    # Instrumentation
    "DEFAULT_INSTRUMENTATION",
    "InstrumentationConfig",
    "trace_computation",
]
