"""
Tests for homvariant.config module.

Run with:
    pytest tests/test_config.py -v
"""

import os
import threading
from unittest import mock

import pytest

# =============================================================================
# FIXTURES
# =============================================================================


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drop cached settings before and after each test."""
    from homvariant.config import reset_settings

    reset_settings()
    yield
    reset_settings()


# =============================================================================
# TESTS
# =============================================================================


class TestSettings:
    """Test settings resolution from the environment."""

    def test_defaults(self):
        from homvariant.config import get_settings

        with mock.patch.dict(os.environ, {}, clear=True):
            settings = get_settings()

        assert settings.circuit_edge_bound == 12
        assert settings.matroid_iso_edge_bound == 8
        assert settings.tensor_budget == 1_000_000
        assert settings.pair_count == 200
        assert settings.seed == 0

    def test_env_override(self):
        from homvariant.config import get_settings

        env = {"HOMVARIANT_PAIR_COUNT": "25", "HOMVARIANT_SEED": "7"}
        with mock.patch.dict(os.environ, env, clear=True):
            settings = get_settings()

        assert settings.pair_count == 25
        assert settings.seed == 7

    def test_invalid_value_falls_back(self):
        """Unparsable values never raise; the default is used."""
        from homvariant.config import get_settings

        with mock.patch.dict(os.environ, {"HOMVARIANT_TENSOR_BUDGET": "lots"}, clear=True):
            assert get_settings().tensor_budget == 1_000_000

    def test_settings_are_frozen(self):
        from dataclasses import FrozenInstanceError

        from homvariant.config import get_settings

        with pytest.raises(FrozenInstanceError):
            get_settings().seed = 3


class TestSingleton:
    """Test the cached settings instance."""

    def test_cached_until_reset(self):
        from homvariant.config import get_settings, reset_settings

        with mock.patch.dict(os.environ, {"HOMVARIANT_SEED": "1"}, clear=True):
            first = get_settings()
        with mock.patch.dict(os.environ, {"HOMVARIANT_SEED": "2"}, clear=True):
            assert get_settings() is first
            reset_settings()
            assert get_settings().seed == 2

    def test_concurrent_first_calls_agree(self):
        from homvariant.config import get_settings

        results = []
        threads = [
            threading.Thread(target=lambda: results.append(get_settings())) for _ in range(8)
        ]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()

        assert all(settings is results[0] for settings in results)


class TestErrors:
    """Test the exception hierarchy shared by the package."""

    def test_input_error_names_field_and_line(self):
        from homvariant.errors import InputError

        error = InputError("expected a nonnegative integer", field="vertices", line=3)

        assert str(error) == "line 3: vertices: expected a nonnegative integer"
        assert isinstance(error, ValueError)

    def test_budget_exceeded_carries_sizes(self):
        from homvariant.errors import BudgetExceeded

        error = BudgetExceeded("tensor entries", budget=10, requested=27)

        assert (error.budget, error.requested) == (10, 27)
        assert "27" in str(error)

    def test_hypothesis_errors_are_input_errors(self):
        from homvariant.errors import (
            ArityMismatch,
            DegenerateY,
            HypothesisViolated,
            InputError,
            NotSeparating,
            NotTwinFree,
        )

        for cls in (ArityMismatch, DegenerateY, HypothesisViolated, NotSeparating, NotTwinFree):
            assert issubclass(cls, InputError)


class TestRationals:
    """Test exact rational parsing and rendering."""

    def test_round_trip_text(self):
        from fractions import Fraction

        from homvariant.rational import format_rational, to_rational

        assert to_rational("-6/4") == Fraction(-3, 2)
        assert format_rational(Fraction(-3, 2)) == "-3/2"
        assert format_rational(Fraction(6, 3)) == "2"

    def test_unicode_minus(self):
        from homvariant.rational import to_rational

        assert to_rational("−54") == -54

    @pytest.mark.parametrize("value", [0.5, "0.5", "1e3", True, "1/0", None])
    def test_rejects_inexact(self, value):
        from homvariant.errors import InputError
        from homvariant.rational import to_rational

        with pytest.raises(InputError):
            to_rational(value, field="y")
