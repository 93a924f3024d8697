"""Tests for homvariant package."""
