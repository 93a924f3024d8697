"""
Automorphism groups of weighted targets and their actions.

HOW IT WORKS:
    automorphisms() runs a backtracking search that assigns images to
    vertices 0, 1, 2, ... in turn. A vertex may only go to a vertex with the
    same profile (a_i, B_ii, sorted row of B), and every new assignment is
    checked against the already assigned vertices, so a dead branch is cut
    as soon as one edge weight disagrees. automorphisms_bruteforce() scans
    all n! permutations and is kept as an oracle.

    Orbits of Γ on maps [k] -> [n] are counted with Burnside's lemma:
    (1/|Γ|) Σ_γ fix(γ)^k, where fix(γ) counts fixed vertices.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from homvariant.config import get_settings
from homvariant.errors import BudgetExceeded, InputError
from homvariant.logger import logger

from .graph import WeightedGraph

# =============================================================================
# PERMUTATIONS
# =============================================================================


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..n-1}; images[i] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"{list(images)} is not a permutation", field="images")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: Permutation) -> Permutation:
        """self ∘ other: apply other first."""
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Permutation:
        inverse = [0] * self.degree
        for i, j in enumerate(self.images):
            inverse[j] = i
        return Permutation(tuple(inverse))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def fixed_points(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i == j)


# =============================================================================
# GROUPS
# =============================================================================


@dataclass(frozen=True)
class AutomorphismGroup:
    """The complete element list of Γ(a, B), identity first."""

    elements: tuple[Permutation, ...]
    n: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def orbits(self) -> list[tuple[int, ...]]:
        """Vertex orbits, each sorted, ordered by smallest member."""
        seen: set[int] = set()
        result = []
        for vertex in range(self.n):
            if vertex in seen:
                continue
            orbit = tuple(sorted({gamma(vertex) for gamma in self.elements}))
            seen.update(orbit)
            result.append(orbit)
        return result

    def is_transitive(self) -> bool:
        return self.n <= 1 or len(self.orbits()) == 1

    def swappable_pairs(self) -> set[tuple[int, int]]:
        """Pairs u < v exchanged by some element."""
        pairs = set()
        for gamma in self.elements:
            for u in range(self.n):
                v = gamma(u)
                if u < v and gamma(v) == u:
                    pairs.add((u, v))
        return pairs

    def unswappable_pairs(self) -> list[tuple[int, int]]:
        swappable = self.swappable_pairs()
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in swappable
        ]

    def is_generously_transitive(self) -> bool:
        generous = not self.unswappable_pairs()
        assert not generous or self.is_transitive()
        return generous

    def self_check(self) -> bool:
        """Identity present, closure under composition and inverse, Lagrange."""
        members = set(self.elements)
        if Permutation.identity(self.n) not in members:
            return False
        if len(members) != len(self.elements):
            return False
        if math.factorial(self.n) % self.order:
            return False
        for gamma in self.elements:
            if gamma.inverse() not in members:
                return False
            for delta in self.elements:
                if gamma.compose(delta) not in members:
                    return False
        return True


def _preserves(target: WeightedGraph, images: Sequence[int]) -> bool:
    n = target.n
    return all(target.a[images[i]] == target.a[i] for i in range(n)) and all(
        target.B[images[i]][images[j]] == target.B[i][j] for i in range(n) for j in range(i, n)
    )


def _profile(target: WeightedGraph, i: int) -> tuple:
    return (target.a[i], target.B[i][i], tuple(sorted(target.B[i])))


def _search(target: WeightedGraph) -> Iterator[tuple[int, ...]]:
    n = target.n
    profiles = [_profile(target, i) for i in range(n)]
    candidates = [[j for j in range(n) if profiles[j] == profiles[i]] for i in range(n)]
    images: list[int] = []
    used = [False] * n

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(images)
            return
        row = target.B[i]
        for j in candidates[i]:
            if used[j]:
                continue
            image_row = target.B[j]
            if any(image_row[images[prior]] != row[prior] for prior in range(i)):
                continue
            images.append(j)
            used[j] = True
            yield from extend(i + 1)
            images.pop()
            used[j] = False

    # Identity comes first since candidates are scanned in increasing order.
    yield from extend(0)


def automorphisms(target: WeightedGraph) -> AutomorphismGroup:
    """
    All permutations preserving a and B.

    Raises:
        BudgetExceeded: n above HOMVARIANT_AUT_SEARCH_BOUND, or the group has
            more than HOMVARIANT_MAX_GROUP_ORDER elements.
    """
    settings = get_settings()
    if target.n > settings.aut_search_bound:
        raise BudgetExceeded(
            "automorphism search vertices", budget=settings.aut_search_bound, requested=target.n
        )
    elements = []
    for images in _search(target):
        elements.append(Permutation(images))
        if len(elements) > settings.max_group_order:
            raise BudgetExceeded(
                "automorphism group order",
                budget=settings.max_group_order,
                requested=len(elements),
            )
    logger.debug("automorphisms_computed", n=target.n, order=len(elements))
    return AutomorphismGroup(tuple(elements), target.n)


def automorphisms_bruteforce(target: WeightedGraph) -> AutomorphismGroup:
    """Scan all n! permutations. Oracle for automorphisms()."""
    bound = get_settings().aut_scan_bound
    if target.n > bound:
        raise BudgetExceeded("automorphism scan vertices", budget=bound, requested=target.n)
    elements = tuple(
        Permutation(images)
        for images in permutations(range(target.n))
        if _preserves(target, images)
    )
    return AutomorphismGroup(elements, target.n)


# =============================================================================
# ACTION ON MAPS [k] -> [n]
# =============================================================================


def orbit_count(target: WeightedGraph, k: int, group: AutomorphismGroup | None = None) -> int:
    """Number of Γ-orbits on maps [k] -> [n], by Burnside's lemma."""
    if k < 0:
        raise InputError(f"expected k >= 0, got {k}", field="k")
    group = group or automorphisms(target)
    total = Fraction(sum(gamma.fixed_points() ** k for gamma in group.elements), group.order)
    assert total.denominator == 1
    return int(total)


def orbits_on_maps(
    target: WeightedGraph, k: int, group: AutomorphismGroup | None = None
) -> list[tuple[tuple[int, ...], ...]]:
    """
    The Γ-orbits on maps [k] -> [n], each sorted, ordered by smallest map.

    Raises:
        BudgetExceeded: n^k above HOMVARIANT_TENSOR_BUDGET.
    """
    budget = get_settings().tensor_budget
    if target.n**k > budget:
        raise BudgetExceeded("maps [k] -> [n]", budget=budget, requested=target.n**k)
    group = group or automorphisms(target)
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for phi in product(range(target.n), repeat=k):
        if phi in seen:
            continue
        orbit = {tuple(gamma(i) for i in phi) for gamma in group.elements}
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit)))
    return orbits
