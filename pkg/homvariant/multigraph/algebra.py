"""
The gluing algebra on k-labelled graphs and Whitney's three operations.

Every operation here keeps edges in a documented order so that the
"natural" edge bijection between input and output is explicit:

    glue(F1, F2)          edges of F1 (in order), then edges of F2
    whitney_flip(F1, F2)  both results share that order, so the bijection is
                          the identity on edge indices
    decompose(F, ...)     Decomposition.edge_order[j] is the index in F of
                          edge j of glue(first, second)
"""

from __future__ import annotations

from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass

from homvariant.errors import ArityMismatch, InputError, NotSeparating

from .graph import LabeledGraph, Multigraph, UnionFind

# =============================================================================
# GLUING PRODUCT
# =============================================================================


def glue(first: LabeledGraph, second: LabeledGraph) -> LabeledGraph:
    """
    Disjoint union of two k-labelled graphs with equally labelled vertices merged.

    Vertices of `first` keep their ids; the unlabelled vertices of `second`
    are appended in increasing order. The result carries the labels of
    `first`.

    Raises:
        ArityMismatch: the two graphs have different k.
    """
    if first.k != second.k:
        raise ArityMismatch(
            f"cannot glue a {first.k}-labelled graph with a {second.k}-labelled graph",
            field="labels",
        )

    mapping: dict[int, int] = {
        vertex: first.labels[position] for position, vertex in enumerate(second.labels)
    }
    next_id = first.vertex_count
    for vertex in second.graph.vertices:
        if vertex not in mapping:
            mapping[vertex] = next_id
            next_id += 1

    edges = first.graph.edges + tuple((mapping[u], mapping[v]) for u, v in second.graph.edges)
    return LabeledGraph(Multigraph(next_id, edges), first.labels)


def transpose(graph: LabeledGraph) -> LabeledGraph:
    """Swap labels 1 and 2 of a 2-labelled graph."""
    if graph.k != 2:
        raise ArityMismatch(f"transpose needs k = 2, got k = {graph.k}", field="labels")
    return LabeledGraph(graph.graph, (graph.labels[1], graph.labels[0]))


def whitney_flip(first: LabeledGraph, second: LabeledGraph) -> tuple[Multigraph, Multigraph]:
    """
    The two underlying graphs of F1·F2 and F1ᵀ·F2.

    Both results list the edges of F1 first and the edges of F2 after, so
    edge i of one corresponds to edge i of the other.
    """
    if first.k != 2 or second.k != 2:
        raise ArityMismatch(
            f"whitney flip needs two 2-labelled graphs, got k = {first.k} and k = {second.k}",
            field="labels",
        )
    return glue(first, second).graph, glue(transpose(first), second).graph


def identify_vertices(first: LabeledGraph, second: LabeledGraph) -> Multigraph:
    """Merge the labelled vertex of `first` with the labelled vertex of `second`."""
    if first.k != 1 or second.k != 1:
        raise ArityMismatch(
            f"vertex identification needs two 1-labelled graphs, "
            f"got k = {first.k} and k = {second.k}",
            field="labels",
        )
    return glue(first, second).graph


# =============================================================================
# SEPARATIONS
# =============================================================================


@dataclass(frozen=True)
class Decomposition:
    """Two labelled pieces whose glue is isomorphic to the decomposed graph."""

    first: LabeledGraph
    second: LabeledGraph
    edge_order: tuple[int, ...]

    def glued(self) -> Multigraph:
        return glue(self.first, self.second).graph


def labeled_subgraph(
    graph: Multigraph,
    labels: Sequence[int],
    vertices: Iterable[int],
    edge_indices: Sequence[int],
) -> LabeledGraph:
    """
    The subgraph on `labels` plus `vertices`, with the given edges in order.

    Labelled vertices become vertices 0..k-1; the rest follow in increasing
    original order.
    """
    order = list(labels) + sorted(set(vertices) - set(labels))
    position = {vertex: new_id for new_id, vertex in enumerate(order)}
    edges = []
    for index in edge_indices:
        u, v = graph.edges[index]
        if u not in position or v not in position:
            raise InputError(
                f"edge {index} leaves the selected vertex set", field="edge subset"
            )
        edges.append((position[u], position[v]))
    return LabeledGraph(Multigraph(len(order), tuple(edges)), tuple(range(len(labels))))


def _validate_shared(graph: Multigraph, shared: Sequence[int]) -> tuple[int, ...]:
    shared = tuple(int(vertex) for vertex in shared)
    if len(set(shared)) != len(shared):
        raise InputError("separating vertices must be distinct", field="vertex")
    for vertex in shared:
        if not 0 <= vertex < graph.vertex_count:
            raise InputError(
                f"vertex {vertex} out of range 0..{graph.vertex_count - 1}", field="vertex"
            )
    return shared


def _component_roots(graph: Multigraph, shared: Sequence[int]) -> UnionFind:
    """Union-find over the components of F minus the shared vertices."""
    blocked = set(shared)
    union_find = UnionFind(graph.vertex_count)
    for u, v in graph.edges:
        if u not in blocked and v not in blocked:
            union_find.union(u, v)
    return union_find


def separation_groups(graph: Multigraph, shared: Sequence[int]) -> list[frozenset[int]]:
    """
    Edge groups that must stay together when F is cut at `shared`.

    An edge with both ends in `shared` (including a loop there) is a group of
    its own; every other edge belongs to the group of the component of
    F - shared it touches. Groups are ordered by their smallest edge index.
    """
    shared = _validate_shared(graph, shared)
    blocked = set(shared)
    union_find = _component_roots(graph, shared)

    groups: dict[tuple[str, int], set[int]] = {}
    for index, (u, v) in enumerate(graph.edges):
        if u in blocked and v in blocked:
            key = ("edge", index)
        else:
            key = ("component", union_find.find(v if u in blocked else u))
        groups.setdefault(key, set()).add(index)
    return sorted((frozenset(group) for group in groups.values()), key=min)


def decompose(
    graph: Multigraph, shared: Sequence[int], part: Collection[int]
) -> Decomposition:
    """
    Cut F at the shared vertices into `part` and the remaining edges.

    Both pieces are labelled at the shared vertices (in the given order).
    Vertices of F - shared that no edge reaches go to the first piece.

    Raises:
        NotSeparating: `part` splits a group, or one side would be empty.
    """
    shared = _validate_shared(graph, shared)
    part = frozenset(part)
    for index in part:
        if not 0 <= index < graph.edge_count:
            raise InputError(
                f"edge index {index} out of range 0..{graph.edge_count - 1}", field="part"
            )
    if not part or len(part) == graph.edge_count:
        raise NotSeparating("both sides of a separation need at least one edge", field="part")

    for group in separation_groups(graph, shared):
        if group & part and not group <= part:
            raise NotSeparating(
                f"edges {sorted(group)} are connected away from vertices {list(shared)} "
                f"and cannot be split apart",
                field="part",
            )

    blocked = set(shared)
    first_edges = sorted(part)
    second_edges = [index for index in range(graph.edge_count) if index not in part]

    def touched(indices: list[int]) -> set[int]:
        return {vertex for index in indices for vertex in graph.edges[index]} - blocked

    second_vertices = touched(second_edges)
    first_vertices = set(graph.vertices) - blocked - second_vertices

    return Decomposition(
        first=labeled_subgraph(graph, shared, first_vertices, first_edges),
        second=labeled_subgraph(graph, shared, second_vertices, second_edges),
        edge_order=tuple(first_edges + second_edges),
    )


def split_at_cut(
    graph: Multigraph, vertex: int, part: Collection[int] | None = None
) -> tuple[LabeledGraph, LabeledGraph]:
    """
    Undo a vertex identification at `vertex`.

    Returns two 1-labelled pieces whose identify_vertices is isomorphic to F.
    `part` selects the edges of the first piece; by default it is the group
    holding the lowest edge index.

    Raises:
        NotSeparating: fewer than two edge groups meet at `vertex`.
    """
    groups = separation_groups(graph, (vertex,))
    if len(groups) < 2:
        raise NotSeparating(
            f"vertex {vertex} does not separate the edge set", field="vertex"
        )
    pieces = decompose(graph, (vertex,), groups[0] if part is None else part)
    return pieces.first, pieces.second
