"""
Tutte polynomial and its chromatic and flow specializations.

    T(F; x, y) = Σ_{A ⊆ E} (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))
    χ(F; n)    = (-1)^r(F) n^c(F) T(F; 1-n, 0)
    φ(F; n)    = (-1)^(|E|-r(F)) T(F; 0, 1-n)

Two independent methods compute T: subset expansion (2^|E| rank
evaluations) and deletion-contraction with loop and bridge base cases,
memoized on the edge multiset.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb

from homvariant.config import get_settings
from homvariant.errors import BudgetExceeded, InputError
from homvariant.logger import logger, trace_computation
from homvariant.multigraph import Multigraph, UnionFind, component_count, rank

from .poly import BivariatePoly

METHODS = ("auto", "subset", "deletion_contraction")


def _shifted_power(exponent: int, axis: int) -> dict[tuple[int, int], int]:
    """Coefficients of (x-1)^exponent (axis 0) or (y-1)^exponent (axis 1)."""
    terms = {}
    for power in range(exponent + 1):
        coefficient = comb(exponent, power) * (-1) ** (exponent - power)
        terms[(power, 0) if axis == 0 else (0, power)] = coefficient
    return terms


def tutte_subset_expansion(graph: Multigraph) -> BivariatePoly:
    bound = get_settings().tutte_subset_bound
    if graph.edge_count > bound:
        raise BudgetExceeded("subset expansion edges", budget=bound, requested=graph.edge_count)

    total_rank = rank(graph)
    exponents: Counter[tuple[int, int]] = Counter()
    for mask in range(1 << graph.edge_count):
        union_find = UnionFind(graph.vertex_count)
        size = 0
        for index, (u, v) in enumerate(graph.edges):
            if mask >> index & 1:
                union_find.union(u, v)
                size += 1
        subset_rank = graph.vertex_count - union_find.count
        exponents[(total_rank - subset_rank, size - subset_rank)] += 1

    result: dict[tuple[int, int], int] = {}
    for (i, j), count in exponents.items():
        for (a, _), cx in _shifted_power(i, 0).items():
            for (_, b), cy in _shifted_power(j, 1).items():
                result[(a, b)] = result.get((a, b), 0) + count * cx * cy
    return BivariatePoly(result)


# =============================================================================
# DELETION-CONTRACTION
# =============================================================================


def _contract(vertex_count: int, edges: tuple, index: int) -> tuple[int, tuple]:
    """Merge the endpoints of edge `index` (the higher id into the lower) and drop it."""
    keep, gone = edges[index]

    def relabel(w: int) -> int:
        if w == gone:
            w = keep
        return w - 1 if w > gone else w

    rest = edges[:index] + edges[index + 1 :]
    merged = tuple(
        sorted((min(relabel(u), relabel(v)), max(relabel(u), relabel(v))) for u, v in rest)
    )
    return vertex_count - 1, merged


def _is_bridge(vertex_count: int, edges: tuple, index: int) -> bool:
    u, v = edges[index]
    union_find = UnionFind(vertex_count)
    for other, (p, q) in enumerate(edges):
        if other != index:
            union_find.union(p, q)
    return union_find.find(u) != union_find.find(v)


def tutte_deletion_contraction(graph: Multigraph) -> BivariatePoly:
    budget = get_settings().tutte_recursion_budget
    memo: dict[tuple[int, tuple], BivariatePoly] = {}
    calls = 0
    x, y = BivariatePoly.x(), BivariatePoly.y()

    def solve(vertex_count: int, edges: tuple) -> BivariatePoly:
        nonlocal calls
        key = (vertex_count, edges)
        if key in memo:
            return memo[key]
        calls += 1
        if calls > budget:
            raise BudgetExceeded("deletion-contraction calls", budget=budget, requested=calls)

        loops = sum(1 for u, v in edges if u == v)
        if loops:
            plain = tuple(e for e in edges if e[0] != e[1])
            result = y**loops * solve(vertex_count, plain)
        elif not edges:
            result = BivariatePoly.constant(1)
        elif _is_bridge(vertex_count, edges, 0):
            result = x * solve(*_contract(vertex_count, edges, 0))
        else:
            deleted = solve(vertex_count, edges[1:])
            result = deleted + solve(*_contract(vertex_count, edges, 0))
        memo[key] = result
        return result

    result = solve(graph.vertex_count, tuple(sorted(graph.edges)))
    logger.debug("tutte_deletion_contraction", edges=graph.edge_count, calls=calls)
    return result


@trace_computation("matroid_poly.tutte", instrumentation_type="engine")
def tutte(graph: Multigraph, method: str = "auto") -> BivariatePoly:
    """
    T(F; x, y).

    method "subset" expands over all edge subsets (|E| up to
    HOMVARIANT_TUTTE_SUBSET_BOUND), "deletion_contraction" recurses, and
    "auto" picks subset expansion up to HOMVARIANT_TUTTE_AUTO_SUBSET edges.

    Raises:
        BudgetExceeded: the chosen method's budget is exceeded.
    """
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}; expected one of {METHODS}", field="method")
    if method == "auto":
        small = graph.edge_count <= get_settings().tutte_auto_subset
        method = "subset" if small else "deletion_contraction"
    if method == "subset":
        return tutte_subset_expansion(graph)
    return tutte_deletion_contraction(graph)


# =============================================================================
# SPECIALIZATIONS
# =============================================================================


def chromatic_value(
    graph: Multigraph, n: int, tutte_poly: BivariatePoly | None = None
) -> Fraction:
    """χ(F; n) = (-1)^r n^c T(F; 1-n, 0)."""
    if n < 0:
        raise InputError(f"expected n >= 0, got {n}", field="n")
    if tutte_poly is None:
        tutte_poly = tutte(graph)
    r, c = rank(graph), component_count(graph)
    return (-1) ** r * Fraction(n) ** c * tutte_poly.evaluate(1 - n, 0)


def flow_value(
    graph: Multigraph, n: int, tutte_poly: BivariatePoly | None = None
) -> Fraction:
    """φ(F; n) = (-1)^(|E|-r) T(F; 0, 1-n)."""
    if n < 1:
        raise InputError(f"expected n >= 1, got {n}", field="n")
    if tutte_poly is None:
        tutte_poly = tutte(graph)
    return (-1) ** (graph.edge_count - rank(graph)) * tutte_poly.evaluate(0, 1 - n)


def chromatic_polynomial(graph: Multigraph) -> BivariatePoly:
    """χ(F; x) as a polynomial in x."""
    x = BivariatePoly.x()
    r, c = rank(graph), component_count(graph)
    specialized = tutte(graph).substitute(1 - x, BivariatePoly.constant(0))
    return (-1) ** r * x**c * specialized


def flow_polynomial(graph: Multigraph) -> BivariatePoly:
    """φ(F; x) as a polynomial in x."""
    x = BivariatePoly.x()
    specialized = tutte(graph).substitute(BivariatePoly.constant(0), 1 - x)
    return (-1) ** (graph.edge_count - rank(graph)) * specialized
