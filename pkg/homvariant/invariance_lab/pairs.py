"""
Random 2-isomorphic multigraph pairs.

Each pair starts from a random multigraph and applies a random sequence of
the three operations that preserve the cycle matroid:

    flip       cut at two vertices {u, v} and reglue one side with u, v swapped
    identify   merge one vertex from each of two different components
    split      cut at one vertex and separate the two sides

The natural edge bijection is tracked through every step: bijection[i] is
the index in `transformed` of edge i of `original`.
"""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from homvariant.config import get_settings
from homvariant.multigraph import (
    Multigraph,
    components,
    decompose,
    glue,
    graph_to_dict,
    identify_vertices,
    labeled_subgraph,
    separation_groups,
    transpose,
)

OPERATIONS = ("flip", "identify", "split")


@dataclass(frozen=True)
class PairBounds:
    """Size of the random start graph and length of the operation sequence."""

    max_vertices: int = 5
    max_edges: int = 6
    max_operations: int = 4


@dataclass(frozen=True)
class TwoIsomorphicPair:
    original: Multigraph
    transformed: Multigraph
    bijection: tuple[int, ...]
    operations: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "original": graph_to_dict(self.original),
            "transformed": graph_to_dict(self.transformed),
            "bijection": list(self.bijection),
            "operations": list(self.operations),
        }


# =============================================================================
# OPERATIONS
# =============================================================================
# Each step returns (new graph, order) where order[j] is the index in the old
# graph of edge j of the new one.


def _choose_part(rng: random.Random, groups: Sequence[frozenset[int]]) -> set[int]:
    chosen = rng.sample(list(groups), rng.randint(1, len(groups) - 1))
    return set().union(*chosen)


def _flip_candidates(graph: Multigraph) -> list[tuple[int, int]]:
    return [
        pair
        for pair in combinations(graph.vertices, 2)
        if len(separation_groups(graph, pair)) >= 2
    ]


def _split_candidates(graph: Multigraph) -> list[int]:
    return [v for v in graph.vertices if len(separation_groups(graph, (v,))) >= 2]


def _flip(graph: Multigraph, rng: random.Random) -> tuple[Multigraph, tuple[int, ...]]:
    shared = rng.choice(_flip_candidates(graph))
    pieces = decompose(graph, shared, _choose_part(rng, separation_groups(graph, shared)))
    return glue(transpose(pieces.first), pieces.second).graph, pieces.edge_order


def _split(graph: Multigraph, rng: random.Random) -> tuple[Multigraph, tuple[int, ...]]:
    vertex = rng.choice(_split_candidates(graph))
    groups = separation_groups(graph, (vertex,))
    pieces = decompose(graph, (vertex,), _choose_part(rng, groups))
    return pieces.first.graph.disjoint_union(pieces.second.graph), pieces.edge_order


def _identify(graph: Multigraph, rng: random.Random) -> tuple[Multigraph, tuple[int, ...]]:
    count, assignment = components(graph)
    first_id, second_id = rng.sample(range(count), 2)
    x = rng.choice([v for v in graph.vertices if assignment[v] == first_id])
    y = rng.choice([v for v in graph.vertices if assignment[v] == second_id])

    inside = [v for v in graph.vertices if assignment[v] == first_id]
    outside = [v for v in graph.vertices if assignment[v] != first_id]
    inside_edges = [i for i, (u, _) in enumerate(graph.edges) if assignment[u] == first_id]
    outside_edges = [i for i, (u, _) in enumerate(graph.edges) if assignment[u] != first_id]

    merged = identify_vertices(
        labeled_subgraph(graph, (x,), inside, inside_edges),
        labeled_subgraph(graph, (y,), outside, outside_edges),
    )
    return merged, tuple(inside_edges + outside_edges)


def applicable_operations(graph: Multigraph) -> list[str]:
    """Operations that can act on F, in OPERATIONS order."""
    available = []
    if _flip_candidates(graph):
        available.append("flip")
    if components(graph)[0] >= 2:
        available.append("identify")
    if _split_candidates(graph):
        available.append("split")
    return available


_STEPS = {"flip": _flip, "identify": _identify, "split": _split}


def apply_operations(
    graph: Multigraph, length: int, rng: random.Random
) -> TwoIsomorphicPair:
    """Apply up to `length` random operations; stops early when none applies."""
    current = graph
    position = list(range(graph.edge_count))
    applied: list[str] = []

    for _ in range(length):
        available = applicable_operations(current)
        if not available:
            break
        name = rng.choice(available)
        current, order = _STEPS[name](current, rng)
        new_index = {old: new for new, old in enumerate(order)}
        position = [new_index[p] for p in position]
        applied.append(name)

    return TwoIsomorphicPair(graph, current, tuple(position), tuple(applied))


# =============================================================================
# STREAM
# =============================================================================


def random_multigraph(bounds: PairBounds, rng: random.Random) -> Multigraph:
    n = rng.randint(1, bounds.max_vertices)
    m = rng.randint(0, bounds.max_edges)
    return Multigraph(n, tuple((rng.randrange(n), rng.randrange(n)) for _ in range(m)))


def generate_two_isomorphic_pairs(
    bounds: PairBounds | None = None, seed: int | None = None
) -> Iterator[TwoIsomorphicPair]:
    """
    Endless deterministic stream of 2-isomorphic pairs.

    The seed defaults to HOMVARIANT_SEED. Take a prefix with
    itertools.islice.
    """
    bounds = bounds or PairBounds()
    rng = random.Random(get_settings().seed if seed is None else seed)
    while True:
        graph = random_multigraph(bounds, rng)
        yield apply_operations(graph, rng.randint(0, bounds.max_operations), rng)
