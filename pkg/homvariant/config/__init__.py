"""
Configuration for homvariant budgets and bounds.

USAGE:
    from homvariant.config import get_settings
    bound = get_settings().circuit_edge_bound

All values come from HOMVARIANT_* environment variables; see
homvariant/config/README.md for the full table.
"""

from .settings import ENV_PREFIX, Settings, get_settings, reset_settings

__all__ = [
    "ENV_PREFIX",
    "Settings",
    "get_settings",
    "reset_settings",
]
