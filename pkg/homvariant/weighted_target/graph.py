"""
Weighted target graphs G(a, B) and their standard constructors.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from homvariant.errors import InputError
from homvariant.multigraph import Multigraph
from homvariant.rational import format_rational, is_integral, to_rational


@dataclass(frozen=True)
class WeightedGraph:
    """
    Vertex weights a (all nonzero) and a symmetric edge-weight matrix B.

    n = 0 only arises as the result of a twin reduction in which every class
    cancelled; input parsers and constructors require n >= 1.
    """

    n: int
    a: tuple[Fraction, ...]
    B: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise InputError(f"expected a nonnegative integer, got {self.n!r}", field="n")
        if len(self.a) != self.n:
            raise InputError(f"expected {self.n} vertex weights, got {len(self.a)}", field="a")
        if len(self.B) != self.n:
            raise InputError(f"expected {self.n} rows, got {len(self.B)}", field="B")

        weights = tuple(to_rational(w, field=f"a[{i}]") for i, w in enumerate(self.a))
        for i, weight in enumerate(weights):
            if weight == 0:
                raise InputError("vertex weights must be nonzero", field=f"a[{i}]")

        rows = []
        for i, row in enumerate(self.B):
            if len(row) != self.n:
                raise InputError(f"expected {self.n} entries, got {len(row)}", field=f"B[{i}]")
            rows.append(tuple(to_rational(x, field=f"B[{i}][{j}]") for j, x in enumerate(row)))
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if rows[i][j] != rows[j][i]:
                    raise InputError(
                        f"B is not symmetric: B[{i}][{j}] = {format_rational(rows[i][j])} "
                        f"but B[{j}][{i}] = {format_rational(rows[j][i])}",
                        field=f"B[{i}][{j}]",
                    )

        object.__setattr__(self, "a", weights)
        object.__setattr__(self, "B", tuple(rows))

    @property
    def is_empty(self) -> bool:
        return self.n == 0

    @property
    def weight_sum(self) -> Fraction:
        return sum(self.a, Fraction(0))

    def has_unit_weights(self) -> bool:
        return all(weight == 1 for weight in self.a)

    def is_integral(self) -> bool:
        return is_integral(self.a) and all(is_integral(row) for row in self.B)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.B[i]

    def describe(self) -> str:
        return f"G(n={self.n}, a=[{', '.join(format_rational(w) for w in self.a)}])"


def _unit_target(matrix: Sequence[Sequence[int | Fraction]]) -> WeightedGraph:
    n = len(matrix)
    return WeightedGraph(n, (Fraction(1),) * n, tuple(tuple(row) for row in matrix))


# =============================================================================
# CONSTRUCTORS
# =============================================================================


def from_simple_graph(adjacency: Sequence[Sequence[int]]) -> WeightedGraph:
    """a = 1 and B the 0/1 adjacency matrix of a simple graph."""
    n = len(adjacency)
    if n < 1:
        raise InputError("a target needs at least one vertex", field="adjacency")
    for i, row in enumerate(adjacency):
        if len(row) != n:
            raise InputError(f"expected {n} entries, got {len(row)}", field=f"adjacency[{i}]")
        if row[i] != 0:
            raise InputError("simple graphs have no loops", field=f"adjacency[{i}][{i}]")
        for j, entry in enumerate(row):
            if entry not in (0, 1):
                raise InputError(f"expected 0 or 1, got {entry!r}", field=f"adjacency[{i}][{j}]")
    return _unit_target(adjacency)


def from_networkx(graph: nx.Graph, *, weight: str = "weight") -> WeightedGraph:
    """
    Target from a networkx graph, vertices in node order.

    Edge weights come from the `weight` attribute (default 1) and add up over
    parallel edges of a MultiGraph; a node `weight` attribute gives a_i.
    """
    nodes = list(graph.nodes)
    if not nodes:
        raise InputError("a target needs at least one vertex", field="graph")
    index = {node: i for i, node in enumerate(nodes)}
    matrix = [[Fraction(0)] * len(nodes) for _ in nodes]
    for u, v, data in graph.edges(data=True):
        value = to_rational(data.get(weight, 1), field=f"edge {u}-{v}")
        i, j = index[u], index[v]
        matrix[i][j] += value
        if i != j:
            matrix[j][i] += value
    weights = tuple(
        to_rational(graph.nodes[node].get(weight, 1), field=f"node {node}") for node in nodes
    )
    return WeightedGraph(len(nodes), weights, tuple(tuple(row) for row in matrix))


def from_multigraph(graph: Multigraph) -> WeightedGraph:
    """a = 1, B_ij the number of i-j edges and B_ii the number of loops at i."""
    if graph.vertex_count < 1:
        raise InputError("a target needs at least one vertex", field="vertices")
    matrix = [[0] * graph.vertex_count for _ in graph.vertices]
    for u, v in graph.edges:
        matrix[u][v] += 1
        if u != v:
            matrix[v][u] += 1
    return _unit_target(matrix)


def complete_graph(n: int) -> WeightedGraph:
    return from_networkx(nx.complete_graph(n))


def cycle_graph(n: int) -> WeightedGraph:
    if n < 3:
        raise InputError(f"a simple cycle needs at least 3 vertices, got {n}", field="n")
    return from_networkx(nx.cycle_graph(n))


def path_graph(n: int) -> WeightedGraph:
    """The path on n vertices."""
    return from_networkx(nx.path_graph(n))


def tutte_target(n: int, y: int | Fraction | str) -> WeightedGraph:
    """G(1, (y-1)I + J): K_n with a loop of weight y on every vertex."""
    if n < 1:
        raise InputError(f"expected n >= 1, got {n}", field="n")
    y = to_rational(y, field="y")
    return _unit_target([[y if i == j else Fraction(1) for j in range(n)] for i in range(n)])


def normalize_residues(m: int, residues: Iterable[int]) -> frozenset[int]:
    if m < 1:
        raise InputError(f"expected a positive modulus, got {m}", field="m")
    return frozenset(int(s) % m for s in residues)


def is_symmetric_set(m: int, residues: Iterable[int]) -> bool:
    residues = normalize_residues(m, residues)
    return all((-s) % m in residues for s in residues)


def cayley_cyclic(m: int, connection_set: Iterable[int]) -> WeightedGraph:
    """
    Cayley graph of Z_m: u ~ v iff v - u lies in S. S must equal -S.

    0 in S puts a loop of weight 1 on every vertex.
    """
    residues = normalize_residues(m, connection_set)
    if not is_symmetric_set(m, residues):
        raise InputError(
            f"connection set {sorted(residues)} is not closed under negation mod {m}",
            field="set",
        )
    return _unit_target(
        [[1 if (v - u) % m in residues else 0 for v in range(m)] for u in range(m)]
    )
