"""
Twin classes and twin reduction.

Vertices i and j are twins when rows i and j of B agree entry by entry,
diagonal included; vertex weights play no part in the relation. Merging a
class into one vertex whose weight is the class sum leaves every hom(F, ·)
unchanged, and a class whose weights cancel can be dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from homvariant.logger import logger

from .graph import WeightedGraph


def twin_classes(target: WeightedGraph) -> list[tuple[int, ...]]:
    """Partition of the vertices into twin classes, ordered by first member."""
    classes: dict[tuple[Fraction, ...], list[int]] = {}
    for i in range(target.n):
        classes.setdefault(target.B[i], []).append(i)
    return [tuple(members) for members in classes.values()]


def is_twin_free(target: WeightedGraph) -> bool:
    return len(set(target.B)) == target.n


@dataclass(frozen=True)
class TwinReduction:
    """A twin-free target plus the classes it was built from."""

    target: WeightedGraph
    kept: tuple[tuple[int, ...], ...]
    dropped: tuple[tuple[int, ...], ...]

    @property
    def is_empty(self) -> bool:
        return self.target.is_empty


def twin_reduction(target: WeightedGraph) -> TwinReduction:
    """
    Merge every twin class C into one vertex of weight Σ_{j∈C} a_j.

    Classes whose weights sum to zero are removed. The first member of each
    kept class supplies the surviving row and column of B. Removing a column
    can make two surviving rows equal, so the merge repeats until the target
    is twin-free; kept and dropped classes are reported in original vertex ids.
    """
    reduced = target
    groups: list[tuple[int, ...]] = [(i,) for i in range(target.n)]
    dropped: list[tuple[int, ...]] = []

    while True:
        kept_positions, merged = [], []
        for members in twin_classes(reduced):
            original = tuple(sorted(v for position in members for v in groups[position]))
            if sum((reduced.a[j] for j in members), Fraction(0)) == 0:
                dropped.append(original)
            else:
                kept_positions.append(members)
                merged.append(original)

        if len(kept_positions) == reduced.n:
            break
        representatives = [members[0] for members in kept_positions]
        reduced = WeightedGraph(
            len(kept_positions),
            tuple(
                sum((reduced.a[j] for j in members), Fraction(0)) for members in kept_positions
            ),
            tuple(tuple(reduced.B[i][j] for j in representatives) for i in representatives),
        )
        groups = merged

    kept = groups
    if dropped:
        logger.info(
            "twin_classes_cancelled",
            dropped=[list(members) for members in dropped],
            remaining=reduced.n,
        )
    return TwinReduction(reduced, tuple(kept), tuple(dropped))


def twin_reduce(target: WeightedGraph) -> WeightedGraph:
    return twin_reduction(target).target
