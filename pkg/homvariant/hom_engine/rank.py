"""
Exact rank of spans of hom tensors.

RationalRowSpace keeps an incremental echelon basis with integer rows:
incoming vectors are cleared of denominators, reduced against the stored
pivots in increasing order by cross-multiplication, and divided by the gcd
of their entries, so no fractions or tolerances ever appear.
"""

from __future__ import annotations

import bisect
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from homvariant.errors import NotTwinFree
from homvariant.logger import logger, trace_computation
from homvariant.multigraph import LabeledGraph, enumerate_labeled
from homvariant.weighted_target import WeightedGraph, is_twin_free, orbit_count, twin_classes

from .tensor import HomTensor, hom_tensor, pairing_a


def _primitive(vector: list[int]) -> list[int]:
    divisor = 0
    for x in vector:
        divisor = gcd(divisor, x)
    if divisor > 1:
        vector = [x // divisor for x in vector]
    return vector


class RationalRowSpace:
    """Incrementally maintained span of rational vectors of fixed length."""

    def __init__(self, dimension: int) -> None:
        self.dimension = dimension
        self._rows: dict[int, list[int]] = {}
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _integral(self, vector: Sequence[int | Fraction]) -> list[int]:
        if len(vector) != self.dimension:
            raise ValueError(f"expected length {self.dimension}, got {len(vector)}")
        values = [Fraction(x) for x in vector]
        scale = lcm(*(x.denominator for x in values)) if values else 1
        return [int(x * scale) for x in values]

    def reduce(self, vector: Sequence[int | Fraction]) -> list[int]:
        """The primitive integer residue of vector against the stored basis."""
        residue = self._integral(vector)
        for pivot in self._pivots:
            coefficient = residue[pivot]
            if coefficient == 0:
                continue
            row = self._rows[pivot]
            lead = row[pivot]
            residue = [lead * x - coefficient * y for x, y in zip(residue, row)]
            residue = _primitive(residue)
        return residue

    def contains(self, vector: Sequence[int | Fraction]) -> bool:
        return not any(self.reduce(vector))

    def add(self, vector: Sequence[int | Fraction]) -> bool:
        """Insert vector; True if it raised the rank."""
        residue = self.reduce(vector)
        pivot = next((i for i, x in enumerate(residue) if x), None)
        if pivot is None:
            return False
        if residue[pivot] < 0:
            residue = [-x for x in residue]
        self._rows[pivot] = _primitive(residue)
        bisect.insort(self._pivots, pivot)
        return True


def matrix_rank(rows: Iterable[Sequence[int | Fraction]], dimension: int) -> int:
    space = RationalRowSpace(dimension)
    for row in rows:
        space.add(row)
    return space.rank


# =============================================================================
# INVARIANT RANK
# =============================================================================


def default_corpus(k: int) -> Iterable[LabeledGraph]:
    """All k-labelled graphs with at most k+2 vertices and k+3 edges."""
    return enumerate_labeled(k, k + 2, k + 3)


@dataclass
class RankReport:
    """Outcome of spanning the invariant tensors of G with a corpus."""

    k: int
    rank: int
    orbit_count: int
    corpus_size: int
    spanning: list[LabeledGraph] = field(default_factory=list)
    tensors: list[HomTensor] = field(default_factory=list, repr=False)

    @property
    def saturated(self) -> bool:
        return self.rank == self.orbit_count

    @property
    def deficit(self) -> int:
        return self.orbit_count - self.rank

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "rank": self.rank,
            "orbit_count": self.orbit_count,
            "corpus_size": self.corpus_size,
            "saturated": self.saturated,
            "deficit": self.deficit,
        }


def _require_twin_free(target: WeightedGraph) -> None:
    if not is_twin_free(target):
        classes = [list(c) for c in twin_classes(target) if len(c) > 1]
        raise NotTwinFree(f"target has twin classes {classes}; twin-reduce it first")


@trace_computation("hom_engine.rank_test", instrumentation_type="engine")
def rank_test(
    target: WeightedGraph, k: int, corpus: Iterable[LabeledGraph] | None = None
) -> RankReport:
    """
    Span hom_tensor(F, G) over the corpus and compare with the orbit count.

    Stops as soon as the rank reaches the orbit count, which bounds it. A
    corpus that runs out first leaves a positive deficit in the report.

    Raises:
        NotTwinFree: G has twins.
    """
    _require_twin_free(target)
    orbits = orbit_count(target, k)
    space = RationalRowSpace(target.n**k)
    report = RankReport(k=k, rank=0, orbit_count=orbits, corpus_size=0)

    for graph in default_corpus(k) if corpus is None else corpus:
        if report.rank == orbits:
            break
        report.corpus_size += 1
        tensor = hom_tensor(graph, target)
        if space.add(tensor.entries):
            report.rank = space.rank
            report.spanning.append(graph)
            report.tensors.append(tensor)

    log = logger.info if report.saturated else logger.warning
    log("rank_test_finished", **report.to_dict())
    return report


def invariant_rank(
    target: WeightedGraph, k: int, corpus: Iterable[LabeledGraph] | None = None
) -> int:
    """Rank of the span of hom_tensor(F, G) over the corpus."""
    return rank_test(target, k, corpus).rank


def invariant_pairing_rank(
    target: WeightedGraph, k: int, corpus: Iterable[LabeledGraph] | None = None
) -> int:
    """
    Rank of the pairing_a Gram matrix of the corpus' spanning tensors.

    Equal to invariant_rank exactly when pairing_a is nondegenerate on the
    spanned subspace.
    """
    tensors = rank_test(target, k, corpus).tensors
    gram = [[pairing_a(s, t, target) for t in tensors] for s in tensors]
    return matrix_rank(gram, len(tensors))
