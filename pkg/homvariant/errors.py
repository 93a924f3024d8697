"""
Exception hierarchy shared by every homvariant module.

Computational code raises these; the CLI maps them to exit codes
(input errors -> 2, budgets -> 3).
"""

from __future__ import annotations


class HomvariantError(Exception):
    """Base class for all homvariant errors."""


class InputError(HomvariantError, ValueError):
    """Malformed or out-of-range input. Names the offending field."""

    def __init__(self, message: str, *, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        prefix = ""
        if line is not None:
            prefix += f"line {line}: "
        if field:
            prefix += f"{field}: "
        super().__init__(prefix + message)


class ArityMismatch(InputError):
    """Labelled graphs with incompatible numbers of labels."""


class NotSeparating(InputError):
    """Split requested at a vertex that does not separate the edge set."""


class NotTwinFree(InputError):
    """A twin-free target was required."""


class HypothesisViolated(InputError):
    """A lemma or theorem was invoked outside its hypotheses."""


class DegenerateY(InputError):
    """The Tutte/hom identity was evaluated at y = 1."""


class ZeroWeightSum(HomvariantError, ArithmeticError):
    """h(F, G) is undefined because the vertex weights of G sum to zero."""


class BudgetExceeded(HomvariantError):
    """A configured size bound would be exceeded."""

    def __init__(self, what: str, *, budget: int, requested: int):
        self.what = what
        self.budget = budget
        self.requested = requested
        super().__init__(f"{what}: requested {requested} exceeds budget {budget}")


class InexactDivision(HomvariantError, ArithmeticError):
    """A division that must be exact left a remainder."""
