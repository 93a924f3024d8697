"""
Finite multigraphs and k-labelled graphs.

A Multigraph keeps its edges as an ordered tuple of unordered vertex pairs.
The position of an edge in that tuple is its edge index; every read-only
operation preserves it, so matroid bijections can be stated as index maps.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import networkx as nx

from homvariant.errors import InputError

Edge = tuple[int, int]


# =============================================================================
# UNION-FIND
# =============================================================================


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by rank."""

    __slots__ = ("parent", "rank", "count")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n
        self.count = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y. Returns False if they were already merged."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.count -= 1
        return True


# =============================================================================
# MULTIGRAPH
# =============================================================================


@dataclass(frozen=True)
class Multigraph:
    """
    A finite multigraph with loops and parallel edges.

    Edges are stored as (min, max) pairs; a loop at v is (v, v). Parallel
    edges are repeated entries with distinct indices.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.vertex_count, int) or self.vertex_count < 0:
            raise InputError(
                f"vertex count must be a nonnegative integer, got {self.vertex_count!r}",
                field="vertices",
            )
        normalized = []
        for index, edge in enumerate(self.edges):
            if len(edge) != 2:
                raise InputError("edge must have two endpoints", field=f"edges[{index}]")
            u, v = int(edge[0]), int(edge[1])
            for position, endpoint in enumerate((u, v)):
                if not 0 <= endpoint < self.vertex_count:
                    raise InputError(
                        f"vertex {endpoint} out of range 0..{self.vertex_count - 1}",
                        field=f"edges[{index}][{position}]",
                    )
            normalized.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> Multigraph:
        return cls(vertex_count, tuple(tuple(edge) for edge in edges))

    @classmethod
    def empty(cls, vertex_count: int = 0) -> Multigraph:
        return cls(vertex_count, ())

    @classmethod
    def cycle(cls, length: int) -> Multigraph:
        """C_length; length 1 is a loop and length 2 a double edge."""
        return cls(length, tuple((i, (i + 1) % length) for i in range(length)))

    @classmethod
    def path(cls, edge_count: int) -> Multigraph:
        return cls(edge_count + 1, tuple((i, i + 1) for i in range(edge_count)))

    @classmethod
    def complete(cls, vertex_count: int) -> Multigraph:
        return cls(
            vertex_count,
            tuple((u, v) for u in range(vertex_count) for v in range(u + 1, vertex_count)),
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def is_loop(self, index: int) -> bool:
        u, v = self.edges[index]
        return u == v

    def is_simple(self) -> bool:
        return all(u != v for u, v in self.edges) and len(set(self.edges)) == len(self.edges)

    def degree(self, vertex: int) -> int:
        """Degree with loops counted twice."""
        return sum((u == vertex) + (v == vertex) for u, v in self.edges)

    def incident_edges(self, vertex: int) -> list[int]:
        return [i for i, (u, v) in enumerate(self.edges) if vertex in (u, v)]

    def disjoint_union(self, other: Multigraph) -> Multigraph:
        """Vertices and edges of other are appended after those of self."""
        shift = self.vertex_count
        shifted = tuple((u + shift, v + shift) for u, v in other.edges)
        return Multigraph(self.vertex_count + other.vertex_count, self.edges + shifted)

    def spanning_subgraph(self, edge_indices: Iterable[int]) -> Multigraph:
        """Keep every vertex and the given edges, in the given order."""
        return Multigraph(self.vertex_count, tuple(self.edges[i] for i in edge_indices))

    def to_networkx(self) -> nx.MultiGraph:
        """networkx view; the edge key is the edge index."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for index, (u, v) in enumerate(self.edges):
            graph.add_edge(u, v, key=index)
        return graph

    def is_isomorphic(self, other: Multigraph) -> bool:
        if (self.vertex_count, self.edge_count) != (other.vertex_count, other.edge_count):
            return False
        return nx.is_isomorphic(self.to_networkx(), other.to_networkx())


# =============================================================================
# LABELLED GRAPHS
# =============================================================================


@dataclass(frozen=True)
class LabeledGraph:
    """
    A multigraph with k distinct labelled vertices.

    labels[i] is the vertex carrying label i+1. k = 0 is a plain graph.
    """

    graph: Multigraph
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        labels = tuple(int(label) for label in self.labels)
        seen: set[int] = set()
        for position, vertex in enumerate(labels):
            if not 0 <= vertex < self.graph.vertex_count:
                raise InputError(
                    f"labelled vertex {vertex} out of range 0..{self.graph.vertex_count - 1}",
                    field=f"labels[{position}]",
                )
            if vertex in seen:
                raise InputError(
                    f"vertex {vertex} carries two labels", field=f"labels[{position}]"
                )
            seen.add(vertex)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(
        cls, vertex_count: int, edges: Iterable[Sequence[int]], labels: Sequence[int] = ()
    ) -> LabeledGraph:
        return cls(Multigraph.from_edges(vertex_count, edges), tuple(labels))

    @property
    def k(self) -> int:
        return len(self.labels)

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def free_vertices(self) -> list[int]:
        labelled = set(self.labels)
        return [v for v in self.graph.vertices if v not in labelled]

    def is_isomorphic(self, other: LabeledGraph) -> bool:
        """Isomorphism that maps label i onto label i for every i."""
        if self.k != other.k:
            return False
        if (self.vertex_count, self.edge_count) != (other.vertex_count, other.edge_count):
            return False
        first, second = self.graph.to_networkx(), other.graph.to_networkx()
        for position, vertex in enumerate(self.labels):
            first.nodes[vertex]["label"] = position + 1
        for position, vertex in enumerate(other.labels):
            second.nodes[vertex]["label"] = position + 1
        return nx.is_isomorphic(
            first,
            second,
            node_match=lambda x, y: x.get("label") == y.get("label"),
        )


# =============================================================================
# CONNECTIVITY AND RANK
# =============================================================================


def components(
    graph: Multigraph, edge_indices: Iterable[int] | None = None
) -> tuple[int, tuple[int, ...]]:
    """
    Connected components of (V(F), A), A defaulting to all edges.

    Returns:
        (count, assignment) where assignment[v] is the component id of v;
        ids are numbered 0, 1, ... in order of their smallest vertex.
    """
    union_find = UnionFind(graph.vertex_count)
    indices = range(graph.edge_count) if edge_indices is None else edge_indices
    for index in indices:
        u, v = graph.edges[index]
        union_find.union(u, v)

    ids: dict[int, int] = {}
    assignment = []
    for vertex in graph.vertices:
        root = union_find.find(vertex)
        if root not in ids:
            ids[root] = len(ids)
        assignment.append(ids[root])
    return len(ids), tuple(assignment)


def component_count(graph: Multigraph, edge_indices: Iterable[int] | None = None) -> int:
    union_find = UnionFind(graph.vertex_count)
    indices = range(graph.edge_count) if edge_indices is None else edge_indices
    for index in indices:
        u, v = graph.edges[index]
        union_find.union(u, v)
    return union_find.count


def rank(graph: Multigraph, edge_indices: Iterable[int] | None = None) -> int:
    """
    Rank of the spanning subgraph (V(F), A): |V| - c(V, A).

    Raises:
        InputError: an edge index is out of range.
    """
    if edge_indices is None:
        return graph.vertex_count - component_count(graph)
    indices = list(edge_indices)
    for index in indices:
        if not 0 <= index < graph.edge_count:
            raise InputError(
                f"edge index {index} out of range 0..{graph.edge_count - 1}",
                field="edge subset",
            )
    return graph.vertex_count - component_count(graph, indices)
