"""
The labelled-graph tensor map p_{a,B} and the bilinear forms on its image.

An entry of hom_tensor(F, G) at φ: [k] -> [n] sums, over all extensions ψ of
φ to V(F), the product of a_ψ(v) over UNLABELLED v and of B over all edges.
Labelled vertices carry no vertex weight, so

    pairing(p(F1), p(F2))      = hom(F1·F2, G)   when a = 1 on the labels,
    pairing_a(p(F1), p(F2), G) = hom(F1·F2, G)   for every G.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod

from homvariant.config import get_settings
from homvariant.errors import ArityMismatch, BudgetExceeded, InputError
from homvariant.multigraph import LabeledGraph
from homvariant.rational import format_rational
from homvariant.weighted_target import AutomorphismGroup, WeightedGraph

from .counting import TableCapExceeded, build_factors, eliminate, target_weights


@dataclass(frozen=True)
class HomTensor:
    """
    Dense rank-k tensor over [n]^k.

    entries[index(φ)] with index(φ) = Σ_i φ(i)·n^(k-1-i), so φ(1) is the most
    significant digit. A k = 0 tensor holds one scalar.
    """

    k: int
    n: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.n**self.k:
            raise InputError(
                f"expected {self.n ** self.k} entries, got {len(self.entries)}", field="entries"
            )
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))

    @classmethod
    def ones(cls, k: int, n: int) -> HomTensor:
        return cls(k, n, (Fraction(1),) * n**k)

    @classmethod
    def basis(cls, k: int, n: int, phi: Sequence[int]) -> HomTensor:
        """The basis tensor e_φ(1) ⊗ ... ⊗ e_φ(k)."""
        entries = [Fraction(0)] * n**k
        entries[map_index(phi, n)] = Fraction(1)
        return cls(k, n, tuple(entries))

    def maps(self) -> Iterator[tuple[int, ...]]:
        """All φ in entry order."""
        return product(range(self.n), repeat=self.k)

    def __getitem__(self, phi: Sequence[int]) -> Fraction:
        return self.entries[map_index(phi, self.n)]

    @property
    def scalar(self) -> Fraction:
        if self.k != 0:
            raise ArityMismatch(f"a {self.k}-tensor is not a scalar", field="k")
        return self.entries[0]

    def _check_shape(self, other: HomTensor) -> None:
        if (self.k, self.n) != (other.k, other.n):
            raise ArityMismatch(
                f"tensor shapes differ: (k={self.k}, n={self.n}) vs (k={other.k}, n={other.n})",
                field="tensor",
            )

    def __add__(self, other: HomTensor) -> HomTensor:
        self._check_shape(other)
        return HomTensor(self.k, self.n, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: HomTensor) -> HomTensor:
        self._check_shape(other)
        return HomTensor(self.k, self.n, tuple(x - y for x, y in zip(self.entries, other.entries)))

    def scale(self, factor: int | Fraction) -> HomTensor:
        return HomTensor(self.k, self.n, tuple(factor * x for x in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def permute_axes(self, order: Sequence[int]) -> HomTensor:
        """Move axes: result[ψ] = self[φ] where ψ(i) = φ(order[i])."""
        if sorted(order) != list(range(self.k)):
            raise InputError(f"{list(order)} is not an axis permutation", field="order")
        entries = [Fraction(0)] * len(self.entries)
        for phi in self.maps():
            psi = tuple(phi[order[i]] for i in range(self.k))
            entries[map_index(psi, self.n)] = self[phi]
        return HomTensor(self.k, self.n, tuple(entries))

    def transpose(self) -> HomTensor:
        """Swap the two axes of a 2-tensor; p(Fᵀ) = p(F).transpose()."""
        if self.k != 2:
            raise ArityMismatch(f"transpose needs k = 2, got k = {self.k}", field="k")
        return self.permute_axes((1, 0))

    def is_symmetric(self) -> bool:
        return self.transpose() == self

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "entries": [format_rational(x) for x in self.entries],
        }


def map_index(phi: Sequence[int], n: int) -> int:
    index = 0
    for image in phi:
        index = index * n + image
    return index


# =============================================================================
# TENSOR MAP
# =============================================================================


def hom_tensor(graph: LabeledGraph, target: WeightedGraph) -> HomTensor:
    """
    p_{a,B}(F): eliminate the unlabelled vertices, then read off every φ.

    Raises:
        BudgetExceeded: n^k above HOMVARIANT_TENSOR_BUDGET.
    """
    settings = get_settings()
    k, n = graph.k, target.n
    if n**k > settings.tensor_budget:
        raise BudgetExceeded("hom tensor entries", budget=settings.tensor_budget, requested=n**k)
    if target.is_empty:
        return HomTensor(k, 0, (Fraction(1 if graph.vertex_count == 0 else 0),) if k == 0 else ())

    a, B = target_weights(target)
    labels = graph.labels
    try:
        factors = eliminate(
            build_factors(graph.graph, a, B, unweighted=labels),
            graph.graph.vertices,
            n,
            keep=labels,
        )
    except TableCapExceeded:
        return _hom_tensor_bruteforce(graph, target)

    entries = []
    for phi in product(range(n), repeat=k):
        assignment = dict(zip(labels, phi))
        entries.append(Fraction(prod((f.value(assignment) for f in factors), start=1)))
    return HomTensor(k, n, tuple(entries))


def _hom_tensor_bruteforce(graph: LabeledGraph, target: WeightedGraph) -> HomTensor:
    a, B = target_weights(target)
    labels = graph.labels
    free = graph.free_vertices()
    edges = graph.graph.edges
    entries = []
    for phi in product(range(target.n), repeat=graph.k):
        psi = dict(zip(labels, phi))
        total = 0
        for extension in product(range(target.n), repeat=len(free)):
            psi.update(zip(free, extension))
            term = prod((B[psi[u]][psi[v]] for u, v in edges), start=1)
            if term:
                total += term * prod((a[psi[v]] for v in free), start=1)
        entries.append(Fraction(total))
    return HomTensor(graph.k, target.n, tuple(entries))


# =============================================================================
# BILINEAR FORMS AND AVERAGING
# =============================================================================


def pairing(first: HomTensor, second: HomTensor) -> Fraction:
    """Plain dot product: the form with (e_φ, e_ψ) = δ_φψ."""
    first._check_shape(second)
    return sum((x * y for x, y in zip(first.entries, second.entries)), Fraction(0))


def label_weights(target: WeightedGraph, k: int) -> HomTensor:
    """The diagonal weight tensor φ ↦ Π_i a_φ(i)."""
    entries = tuple(
        prod((target.a[i] for i in phi), start=Fraction(1))
        for phi in product(range(target.n), repeat=k)
    )
    return HomTensor(k, target.n, entries)


def pairing_a(first: HomTensor, second: HomTensor, target: WeightedGraph) -> Fraction:
    """Dot product weighted by Π_i a_φ(i), accounting for the shared labelled vertices."""
    first._check_shape(second)
    if first.n != target.n:
        raise ArityMismatch(
            f"tensor has n = {first.n} but the target has n = {target.n}", field="tensor"
        )
    weights = label_weights(target, first.k)
    return sum(
        (w * x * y for w, x, y in zip(weights.entries, first.entries, second.entries)),
        Fraction(0),
    )


def group_average(tensor: HomTensor, group: AutomorphismGroup) -> HomTensor:
    """(1/|Γ|) Σ_γ γ·t, i.e. result[φ] = mean over γ of t[γ∘φ]."""
    if group.n != tensor.n:
        raise ArityMismatch(
            f"group acts on {group.n} points but the tensor has n = {tensor.n}", field="group"
        )
    entries = []
    for phi in tensor.maps():
        total = sum((tensor[tuple(gamma(i) for i in phi)] for gamma in group.elements), Fraction(0))
        entries.append(total / group.order)
    return HomTensor(tensor.k, tensor.n, tuple(entries))
