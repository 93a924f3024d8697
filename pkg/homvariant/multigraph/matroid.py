"""
Cycle matroid utilities: rank oracle, circuit listing, isomorphism search.

Everything here is brute force over edge subsets or edge bijections and is
therefore guarded by the budgets in homvariant.config.
"""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from homvariant.config import get_settings
from homvariant.errors import BudgetExceeded, InputError
from homvariant.logger import logger

from .graph import Multigraph, rank

Circuit = frozenset[int]


@dataclass(frozen=True)
class CycleMatroidView:
    """M(F) seen through its rank function, with circuits when |E| is small."""

    ground_size: int
    rank_oracle: Callable[[Iterable[int]], int]
    circuits: tuple[Circuit, ...] | None = None

    def rank(self, subset: Iterable[int] = ()) -> int:
        return self.rank_oracle(subset)

    def is_independent(self, subset: Iterable[int]) -> bool:
        subset = list(subset)
        return self.rank_oracle(subset) == len(subset)

    def spot_check(self, samples: int = 64, seed: int = 0) -> bool:
        """
        Sample the rank axioms: r(∅) = 0, monotonicity, submodularity, and
        r(C) = |C| - 1 for every listed circuit.
        """
        if self.rank_oracle(()) != 0:
            return False
        if self.circuits is not None:
            if any(self.rank_oracle(circuit) != len(circuit) - 1 for circuit in self.circuits):
                return False

        rng = random.Random(seed)
        ground = range(self.ground_size)
        for _ in range(samples):
            first = {e for e in ground if rng.random() < 0.5}
            second = {e for e in ground if rng.random() < 0.5}
            if self.rank_oracle(first & second) > self.rank_oracle(first):
                return False
            union, meet = first | second, first & second
            if self.rank_oracle(union) + self.rank_oracle(meet) > (
                self.rank_oracle(first) + self.rank_oracle(second)
            ):
                return False
        return True


def cycle_matroid(graph: Multigraph) -> CycleMatroidView:
    """Rank oracle for F, with circuits materialized up to the circuit bound."""
    listed = None
    if graph.edge_count <= get_settings().circuit_edge_bound:
        listed = tuple(circuits(graph))
    return CycleMatroidView(
        ground_size=graph.edge_count,
        rank_oracle=lambda subset: rank(graph, subset),
        circuits=listed,
    )


def circuits(graph: Multigraph) -> list[Circuit]:
    """
    All minimal dependent edge sets of F, by size then lexicographically.

    Raises:
        BudgetExceeded: |E(F)| is above HOMVARIANT_CIRCUIT_EDGE_BOUND.
    """
    bound = get_settings().circuit_edge_bound
    if graph.edge_count > bound:
        raise BudgetExceeded("circuit listing edges", budget=bound, requested=graph.edge_count)

    found: list[Circuit] = []
    # A circuit has at most r(F) + 1 edges.
    largest = min(graph.edge_count, rank(graph) + 1)
    for size in range(1, largest + 1):
        for subset in combinations(range(graph.edge_count), size):
            members = frozenset(subset)
            if rank(graph, subset) == size:
                continue
            if any(circuit <= members for circuit in found):
                continue
            found.append(members)
    return found


# =============================================================================
# ISOMORPHISM
# =============================================================================


def _edge_signatures(ground_size: int, family: Sequence[Circuit]) -> list[tuple[int, ...]]:
    signature: list[list[int]] = [[] for _ in range(ground_size)]
    for circuit in family:
        for edge in circuit:
            signature[edge].append(len(circuit))
    return [tuple(sorted(sizes)) for sizes in signature]


def _maps_circuits(
    mapping: Sequence[int], source: Sequence[Circuit], target: set[Circuit]
) -> bool:
    return all(frozenset(mapping[edge] for edge in circuit) in target for circuit in source)


def is_matroid_isomorphism(
    graph: Multigraph, other: Multigraph, bijection: Sequence[int]
) -> bool:
    """
    True when edge i -> bijection[i] carries the circuits of F exactly onto
    the circuits of F2.
    """
    if graph.edge_count != other.edge_count:
        return False
    if sorted(bijection) != list(range(graph.edge_count)):
        raise InputError("edge map is not a bijection", field="bijection")
    source, target = circuits(graph), circuits(other)
    if len(source) != len(target):
        return False
    return _maps_circuits(bijection, source, set(target))


def preserves_bases(graph: Multigraph, other: Multigraph, bijection: Sequence[int]) -> bool:
    """
    True when edge i -> bijection[i] maps the bases of M(F) exactly onto the
    bases of M(F2), checked with the rank oracle on every r(F)-subset.

    Used for bijections above the circuit bound.

    Raises:
        BudgetExceeded: |E| is above HOMVARIANT_TUTTE_SUBSET_BOUND.
    """
    bound = get_settings().tutte_subset_bound
    if graph.edge_count > bound:
        raise BudgetExceeded("basis check edges", budget=bound, requested=graph.edge_count)
    if graph.edge_count != other.edge_count:
        return False
    if sorted(bijection) != list(range(graph.edge_count)):
        raise InputError("edge map is not a bijection", field="bijection")
    size = rank(graph)
    if rank(other) != size:
        return False
    for subset in combinations(range(graph.edge_count), size):
        image = [bijection[edge] for edge in subset]
        if (rank(graph, subset) == size) != (rank(other, image) == size):
            return False
    return True


def matroid_isomorphic(graph: Multigraph, other: Multigraph) -> tuple[int, ...] | None:
    """
    Search for an edge bijection F -> F2 mapping circuits onto circuits.

    The identity is tried first. Otherwise a backtracking search assigns
    edges in index order, only to edges with the same circuit-size
    signature, and rejects a partial map as soon as a fully assigned circuit
    lands outside the circuits of F2.

    Raises:
        BudgetExceeded: |E| is above HOMVARIANT_MATROID_ISO_EDGE_BOUND.
    """
    bound = get_settings().matroid_iso_edge_bound
    size = max(graph.edge_count, other.edge_count)
    if size > bound:
        raise BudgetExceeded("matroid isomorphism edges", budget=bound, requested=size)
    if graph.edge_count != other.edge_count:
        return None

    source, target = circuits(graph), circuits(other)
    if Counter(map(len, source)) != Counter(map(len, target)):
        return None
    target_set = set(target)

    identity = tuple(range(graph.edge_count))
    if _maps_circuits(identity, source, target_set):
        return identity

    source_sig = _edge_signatures(graph.edge_count, source)
    target_sig = _edge_signatures(other.edge_count, target)
    if Counter(source_sig) != Counter(target_sig):
        return None

    # Circuits become checkable once their largest edge is assigned.
    closing: list[list[Circuit]] = [[] for _ in range(graph.edge_count)]
    for circuit in source:
        closing[max(circuit)].append(circuit)

    mapping: list[int] = []
    used = [False] * other.edge_count

    def extend(edge: int) -> bool:
        if edge == graph.edge_count:
            return True
        for image in range(other.edge_count):
            if used[image] or target_sig[image] != source_sig[edge]:
                continue
            mapping.append(image)
            used[image] = True
            if all(
                frozenset(mapping[e] for e in circuit) in target_set
                for circuit in closing[edge]
            ) and extend(edge + 1):
                return True
            mapping.pop()
            used[image] = False
        return False

    if extend(0):
        return tuple(mapping)
    logger.debug("matroid_isomorphism_not_found", edges=graph.edge_count)
    return None
