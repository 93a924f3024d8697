"""
Bivariate polynomials over QQ for Tutte polynomials and their specializations.

Arithmetic, evaluation and substitution are delegated to sympy.Poly; this
module keeps the stable text and dict layouts used by the CLI.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from fractions import Fraction
from typing import Any

import sympy as sp
from sympy import QQ

from homvariant.errors import InputError
from homvariant.rational import format_rational, to_rational

Monomial = tuple[int, int]

X, Y = sp.symbols("x y")


def _to_sympy(value: int | Fraction) -> sp.Rational:
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def _to_fraction(value: Any) -> Fraction:
    rational = sp.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


class BivariatePoly:
    """
    Σ c_ij x^i y^j with exact rational coefficients.

    Instances are treated as immutable; every operation returns a new one.
    """

    __slots__ = ("_poly",)

    def __init__(self, terms: Mapping[Monomial, int | Fraction] | None = None) -> None:
        rep: dict[Monomial, sp.Rational] = {}
        for (i, j), coefficient in (terms or {}).items():
            if i < 0 or j < 0:
                raise InputError(f"negative exponent in x^{i} y^{j}", field="terms")
            key = (int(i), int(j))
            rep[key] = rep.get(key, sp.Integer(0)) + _to_sympy(coefficient)
        rep = {monomial: c for monomial, c in rep.items() if c != 0}
        if rep:
            self._poly = sp.Poly.from_dict(rep, X, Y, domain=QQ)
        else:
            self._poly = sp.Poly(0, X, Y, domain=QQ)

    @classmethod
    def _wrap(cls, poly: sp.Poly) -> BivariatePoly:
        instance = cls.__new__(cls)
        instance._poly = poly
        return instance

    @classmethod
    def constant(cls, value: int | Fraction) -> BivariatePoly:
        return cls({(0, 0): value})

    @classmethod
    def x(cls) -> BivariatePoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BivariatePoly:
        return cls({(0, 1): 1})

    @property
    def sympy_poly(self) -> sp.Poly:
        return self._poly

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return {
            (int(i), int(j)): _to_fraction(c)
            for (i, j), c in self._poly.as_dict().items()
            if c != 0
        }

    def coefficient(self, i: int, j: int = 0) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return self._poly.is_zero

    def degree(self) -> tuple[int, int]:
        """(max x-degree, max y-degree); (0, 0) for the zero polynomial."""
        if self.is_zero():
            return (0, 0)
        return int(self._poly.degree(X)), int(self._poly.degree(Y))

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), reverse=True))

    # ----- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other: Any) -> BivariatePoly:
        if isinstance(other, BivariatePoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return BivariatePoly.constant(other)
        return NotImplemented

    def __add__(self, other: Any) -> BivariatePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BivariatePoly._wrap(self._poly + other._poly)

    __radd__ = __add__

    def __neg__(self) -> BivariatePoly:
        return BivariatePoly._wrap(-self._poly)

    def __sub__(self, other: Any) -> BivariatePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BivariatePoly._wrap(self._poly - other._poly)

    def __rsub__(self, other: Any) -> BivariatePoly:
        return (-self) + other

    def __mul__(self, other: Any) -> BivariatePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BivariatePoly._wrap(self._poly * other._poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BivariatePoly:
        if exponent < 0:
            raise InputError(f"negative power {exponent}", field="exponent")
        return BivariatePoly._wrap(self._poly**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivariatePoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == BivariatePoly.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # ----- evaluation -------------------------------------------------------

    def evaluate(self, x: int | Fraction, y: int | Fraction = 0) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        value = self._poly.eval({X: _to_sympy(x), Y: _to_sympy(y)})
        return _to_fraction(value)

    def substitute(self, x: BivariatePoly, y: BivariatePoly) -> BivariatePoly:
        """The polynomial p(x(·), y(·))."""
        expression = self._poly.as_expr().xreplace(
            {X: x._poly.as_expr(), Y: y._poly.as_expr()}
        )
        return BivariatePoly._wrap(sp.Poly(expression, X, Y, domain=QQ))

    # ----- text -------------------------------------------------------------

    def to_dict(self) -> dict[str, list[dict[str, Any]]]:
        """{"terms": [{"x": i, "y": j, "c": "p/q"}, ...]} sorted by (i, j) descending."""
        return {
            "terms": [
                {"x": i, "y": j, "c": format_rational(c)} for (i, j), c in self
            ]
        }

    @classmethod
    def from_dict(cls, document: Mapping[str, Any]) -> BivariatePoly:
        raw = document.get("terms")
        if not isinstance(raw, list):
            raise InputError("expected a list of terms", field="terms")
        terms: dict[Monomial, Fraction] = {}
        for index, term in enumerate(raw):
            try:
                key = (int(term["x"]), int(term["y"]))
                terms[key] = terms.get(key, Fraction(0)) + to_rational(
                    term["c"], field=f"terms[{index}].c"
                )
            except (KeyError, TypeError) as exc:
                raise InputError(
                    "expected {'x': int, 'y': int, 'c': 'p/q'}", field=f"terms[{index}]"
                ) from exc
        return cls(terms)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (i, j), c in self:
            factors = [f"x^{i}" if i > 1 else "x"] if i else []
            factors += [f"y^{j}" if j > 1 else "y"] if j else []
            magnitude = abs(c)
            if not factors:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(magnitude)] + factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        return text + "".join(f" {sign} {body}" for sign, body in parts[1:])

    def __repr__(self) -> str:
        return f"BivariatePoly({self})"
