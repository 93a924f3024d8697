"""
Exact weighted homomorphism counts.

    hom(F, G(a,B)) = Σ_{φ: V(F) -> [n]} Π_v a_φ(v) Π_{uv ∈ E(F)} B_φ(u)φ(v)

HOW IT WORKS:
    hom() is the definition, summed over all n^|V(F)| maps. It is the
    oracle for everything else.

    hom_fast() is sequential vertex elimination. F becomes a set of factors
    (one a-vector per vertex, B^m per vertex pair joined by m parallel edges,
    diag(B)^m per vertex with m loops). Repeatedly, the vertex with the
    fewest current neighbours is summed out: every factor touching it is
    multiplied into one table over its neighbours. Cost is exponential only
    in the largest neighbourhood met. Tables are sparse dicts (zero entries
    are never stored). If a table would exceed
    HOMVARIANT_ELIMINATION_TABLE_CAP entries the call falls back to hom().

    Integral targets are computed with Python ints and converted at the end.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod

from homvariant.config import get_settings
from homvariant.errors import ZeroWeightSum
from homvariant.logger import logger
from homvariant.multigraph import Multigraph, component_count
from homvariant.weighted_target import WeightedGraph

Number = int | Fraction


def target_weights(target: WeightedGraph) -> tuple[list[Number], list[list[Number]]]:
    """a and B as ints when every weight is integral, else as Fractions."""
    if target.is_integral():
        return [int(w) for w in target.a], [[int(x) for x in row] for row in target.B]
    return list(target.a), [list(row) for row in target.B]


# =============================================================================
# BRUTE FORCE
# =============================================================================


def hom(graph: Multigraph, target: WeightedGraph) -> Fraction:
    """
    hom(F, G) by direct summation over all maps V(F) -> [n].

    Costs n^|V(F)| · |E(F)|. hom(empty graph, G) = 1; into the empty target
    every graph with a vertex has hom 0.
    """
    if target.is_empty:
        return Fraction(1 if graph.vertex_count == 0 else 0)
    a, B = target_weights(target)
    edges = graph.edges
    total: Number = 0
    for phi in product(range(target.n), repeat=graph.vertex_count):
        term: Number = 1
        for u, v in edges:
            term *= B[phi[u]][phi[v]]
            if not term:
                break
        else:
            for image in phi:
                term *= a[image]
            total += term
    return Fraction(total)


# =============================================================================
# VERTEX ELIMINATION
# =============================================================================


@dataclass
class Factor:
    """A sparse table over assignments of `scope` (sorted vertex ids)."""

    scope: tuple[int, ...]
    table: dict[tuple[int, ...], Number]

    def value(self, assignment: dict[int, int]) -> Number:
        return self.table.get(tuple(assignment[v] for v in self.scope), 0)


class TableCapExceeded(Exception):
    """Internal signal: an elimination table would exceed the cap."""


def build_factors(
    graph: Multigraph,
    a: Sequence[Number],
    B: Sequence[Sequence[Number]],
    *,
    unweighted: Iterable[int] = (),
) -> list[Factor]:
    """Factors of F; vertices in `unweighted` get no a-vector."""
    n = len(a)
    skip = set(unweighted)
    factors = [
        Factor((v,), {(i,): a[i] for i in range(n)}) for v in graph.vertices if v not in skip
    ]
    for (u, v), multiplicity in sorted(Counter(graph.edges).items()):
        if u == v:
            table = {(i,): B[i][i] ** multiplicity for i in range(n)}
            factors.append(Factor((u,), {key: x for key, x in table.items() if x}))
        else:
            table = {(i, j): B[i][j] ** multiplicity for i in range(n) for j in range(n)}
            factors.append(Factor((u, v), {key: x for key, x in table.items() if x}))
    return factors


def _sum_out(vertex: int, touching: list[Factor], n: int, cap: int) -> Factor:
    scope = tuple(sorted({v for factor in touching for v in factor.scope} - {vertex}))
    if n ** len(scope) > cap:
        raise TableCapExceeded(n ** len(scope))
    table: dict[tuple[int, ...], Number] = {}
    assignment: dict[int, int] = {}
    for values in product(range(n), repeat=len(scope)):
        assignment.update(zip(scope, values))
        total: Number = 0
        for image in range(n):
            assignment[vertex] = image
            term: Number = 1
            for factor in touching:
                term *= factor.value(assignment)
                if not term:
                    break
            total += term
        if total:
            table[values] = total
    return Factor(scope, table)


def eliminate(
    factors: list[Factor],
    vertices: Iterable[int],
    n: int,
    *,
    keep: Iterable[int] = (),
    cap: int | None = None,
) -> list[Factor]:
    """
    Sum out every vertex not in `keep`, min-degree first.

    Returns the remaining factors; their scopes lie inside `keep`.

    Raises:
        TableCapExceeded: some intermediate table would exceed `cap`.
    """
    cap = get_settings().elimination_table_cap if cap is None else cap
    kept = set(keep)
    pending = set(vertices) - kept
    factors = list(factors)

    while pending:

        def degree(v: int) -> tuple[int, int]:
            neighbours = {u for f in factors if v in f.scope for u in f.scope}
            return len(neighbours - {v}), v

        vertex = min(pending, key=degree)
        touching = [f for f in factors if vertex in f.scope]
        factors = [f for f in factors if vertex not in f.scope]
        factors.append(_sum_out(vertex, touching, n, cap))
        pending.discard(vertex)
    return factors


def hom_fast(graph: Multigraph, target: WeightedGraph) -> Fraction:
    """hom(F, G) by vertex elimination; always equal to hom()."""
    if target.is_empty:
        return Fraction(1 if graph.vertex_count == 0 else 0)
    a, B = target_weights(target)
    try:
        remaining = eliminate(build_factors(graph, a, B), graph.vertices, target.n)
    except TableCapExceeded as exc:
        logger.warning(
            "hom_fast_fallback",
            vertices=graph.vertex_count,
            edges=graph.edge_count,
            table_entries=exc.args[0],
        )
        return hom(graph, target)
    return Fraction(prod((factor.table.get((), 0) for factor in remaining), start=1))


def h(graph: Multigraph, target: WeightedGraph) -> Fraction:
    """
    hom(F, G) / (Σ a_i)^c(F).

    Raises:
        ZeroWeightSum: the vertex weights of G sum to zero.
    """
    weight_sum = target.weight_sum
    if weight_sum == 0:
        raise ZeroWeightSum(f"vertex weights of {target.describe()} sum to zero")
    return hom_fast(graph, target) / weight_sum ** component_count(graph)
