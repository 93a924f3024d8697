"""
Exhaustive small-graph streams used as test and search corpora.

COST MODEL:
    With p = n(n+1)/2 vertex pairs (loops included), the multigraph stream
    visits C(p + m - 1, m) edge multisets for every n <= max_vertices and
    m <= max_edges. Up to 6 vertices each multiset is reduced to a canonical
    form by permuting vertices inside (degree, loop count) classes, which is
    at most n! relabellings per graph; larger graphs are emitted without
    dedup. (4 vertices, 6 edges) is about 8000 multisets.

Streams are generators: they restart from the beginning on every call and
always yield in the same order, by vertex count, then edge count, then
lexicographic edge multiset.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, combinations_with_replacement, permutations, product

from .graph import Edge, LabeledGraph, Multigraph

DEDUP_VERTEX_LIMIT = 6


def _canonical_form(vertex_count: int, edges: tuple[Edge, ...], fixed: int) -> tuple[Edge, ...]:
    """
    Smallest sorted edge list over relabellings of vertices fixed..n-1 that
    keep (degree, loops) classes in a fixed order.
    """
    degree = [0] * vertex_count
    loops = [0] * vertex_count
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
        if u == v:
            loops[u] += 1

    free = sorted(range(fixed, vertex_count), key=lambda v: (-degree[v], -loops[v], v))
    classes: list[list[int]] = []
    for vertex in free:
        if classes and (degree[classes[-1][0]], loops[classes[-1][0]]) == (
            degree[vertex],
            loops[vertex],
        ):
            classes[-1].append(vertex)
        else:
            classes.append([vertex])

    best: tuple[Edge, ...] | None = None
    for arrangement in product(*(permutations(cls) for cls in classes)):
        mapping = list(range(vertex_count))
        next_id = fixed
        for cls in arrangement:
            for vertex in cls:
                mapping[vertex] = next_id
                next_id += 1
        relabelled = tuple(
            sorted(
                (min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in edges
            )
        )
        if best is None or relabelled < best:
            best = relabelled
    return best if best is not None else ()


def _multisets(vertex_count: int, max_edges: int, fixed: int) -> Iterator[tuple[Edge, ...]]:
    pairs = [(u, v) for u in range(vertex_count) for v in range(u, vertex_count)]
    dedup = vertex_count <= DEDUP_VERTEX_LIMIT
    for edge_count in range(max_edges + 1):
        seen: set[tuple[Edge, ...]] = set()
        for edges in combinations_with_replacement(pairs, edge_count):
            if dedup:
                key = _canonical_form(vertex_count, edges, fixed)
                if key in seen:
                    continue
                seen.add(key)
            yield edges


def enumerate_multigraphs(max_vertices: int, max_edges: int) -> Iterator[Multigraph]:
    """Every multigraph with at most max_vertices vertices and max_edges edges."""
    for vertex_count in range(max_vertices + 1):
        for edges in _multisets(vertex_count, max_edges, fixed=0):
            yield Multigraph(vertex_count, edges)


def enumerate_labeled(k: int, max_vertices: int, max_edges: int) -> Iterator[LabeledGraph]:
    """
    Every k-labelled multigraph within bounds; label i sits on vertex i-1.

    Dedup only relabels unlabelled vertices, so distinct label placements
    are kept apart.
    """
    labels = tuple(range(k))
    for vertex_count in range(k, max_vertices + 1):
        for edges in _multisets(vertex_count, max_edges, fixed=k):
            yield LabeledGraph(Multigraph(vertex_count, edges), labels)


def enumerate_simple_graphs(max_vertices: int, min_vertices: int = 1) -> Iterator[Multigraph]:
    """
    Simple graphs on min_vertices..max_vertices vertices, one per
    isomorphism class up to 6 vertices.
    """
    for vertex_count in range(min_vertices, max_vertices + 1):
        pairs = list(combinations(range(vertex_count), 2))
        dedup = vertex_count <= DEDUP_VERTEX_LIMIT
        for edge_count in range(len(pairs) + 1):
            seen: set[tuple[Edge, ...]] = set()
            for edges in combinations(pairs, edge_count):
                if dedup:
                    key = _canonical_form(vertex_count, edges, fixed=0)
                    if key in seen:
                        continue
                    seen.add(key)
                yield Multigraph(vertex_count, edges)
