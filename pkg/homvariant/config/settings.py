"""
Computation budgets and default bounds.

USAGE:
    from homvariant.config import get_settings

    settings = get_settings()
    if edge_count > settings.circuit_edge_bound:
        raise BudgetExceeded(...)

ENVIRONMENT VARIABLES:
    HOMVARIANT_CIRCUIT_EDGE_BOUND: Max edges for circuit listing (default: 12)
    HOMVARIANT_MATROID_ISO_EDGE_BOUND: Max edges for brute-force matroid isomorphism (default: 8)
    HOMVARIANT_AUT_SCAN_BOUND: Max vertices for the full n! automorphism scan (default: 10)
    HOMVARIANT_AUT_SEARCH_BOUND: Max vertices for backtracking automorphism search (default: 16)
    HOMVARIANT_MAX_GROUP_ORDER: Max automorphism group order listed (default: 200000)
    HOMVARIANT_ELIMINATION_TABLE_CAP: Max entries of one elimination table (default: 1000000)
    HOMVARIANT_TENSOR_BUDGET: Max entries n^k of a hom tensor (default: 1000000)
    HOMVARIANT_ENUMERATION_BUDGET: Max assignments enumerated by oracles (default: 20000000)
    HOMVARIANT_TUTTE_SUBSET_BOUND: Max edges for subset expansion (default: 20)
    HOMVARIANT_TUTTE_AUTO_SUBSET: Auto mode uses subset expansion up to this (default: 12)
    HOMVARIANT_TUTTE_RECURSION_BUDGET: Max deletion-contraction calls (default: 2000000)
    HOMVARIANT_PAIR_COUNT: Generated 2-isomorphic pairs per Theorem 1 check (default: 200)
    HOMVARIANT_SEED: Default seed for generated pairs (default: 0)
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass

ENV_PREFIX = "HOMVARIANT_"


def _safe_int(value, default):
    """Safely convert a value to int, returning default on failure."""
    try:
        return int(value)
    except (ValueError, TypeError):
        return default


@dataclass(frozen=True)
class Settings:
    """Resolved budgets. Every field has an environment override."""

    circuit_edge_bound: int = 12
    matroid_iso_edge_bound: int = 8
    aut_scan_bound: int = 10
    aut_search_bound: int = 16
    max_group_order: int = 200_000
    elimination_table_cap: int = 1_000_000
    tensor_budget: int = 1_000_000
    enumeration_budget: int = 20_000_000
    tutte_subset_bound: int = 20
    tutte_auto_subset: int = 12
    tutte_recursion_budget: int = 2_000_000
    pair_count: int = 200
    seed: int = 0

    @classmethod
    def from_env(cls) -> Settings:
        """Read configuration from environment variables. Never raises."""
        defaults = cls()
        values = {}
        for name in cls.__dataclass_fields__:
            raw = os.getenv(ENV_PREFIX + name.upper())
            values[name] = _safe_int(raw, getattr(defaults, name))
        return cls(**values)


# =============================================================================
# SINGLETON
# =============================================================================

_settings: Settings | None = None
_settings_lock = threading.Lock()


def get_settings() -> Settings:
    """
    Get or create the process-wide settings.

    Uses double-check locking so that concurrent first calls agree.
    """
    global _settings
    if _settings is not None:
        return _settings
    with _settings_lock:
        if _settings is None:
            _settings = Settings.from_env()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings; the next get_settings() rereads the environment."""
    global _settings
    with _settings_lock:
        _settings = None
