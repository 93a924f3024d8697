"""
Exact rationals: parsing from text and canonical "p/q" rendering.

Every number that crosses a file or log boundary goes through these two
functions; floats are rejected outright.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from homvariant.errors import InputError

Rational = Fraction


def to_rational(value: object, *, field: str | None = None) -> Fraction:
    """
    Convert an int, Fraction or "p/q" / integer string into a Fraction.

    Raises:
        InputError: floats, booleans, malformed strings, or a zero denominator.
    """
    if isinstance(value, bool):
        raise InputError(f"expected a rational, got {value!r}", field=field)
    if isinstance(value, _RationalABC):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        if "." in text or "e" in text.lower():
            raise InputError(f"expected an exact rational 'p/q', got {value!r}", field=field)
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"expected a rational 'p/q', got {value!r}", field=field) from exc
    raise InputError(f"expected a rational, got {type(value).__name__}", field=field)


def format_rational(value: int | Fraction) -> str:
    """'p/q' in lowest terms, or just 'p' for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integral(values) -> bool:
    return all(Fraction(value).denominator == 1 for value in values)
