"""
Brute-force counting oracles: proper colourings, nowhere-zero flows and
tensions. Each enumerates its full assignment space and is guarded by
HOMVARIANT_ENUMERATION_BUDGET.
"""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import product

from homvariant.config import get_settings
from homvariant.errors import BudgetExceeded, InexactDivision, InputError
from homvariant.multigraph import Multigraph, component_count
from homvariant.weighted_target import normalize_residues


def _check_budget(what: str, requested: int) -> None:
    budget = get_settings().enumeration_budget
    if requested > budget:
        raise BudgetExceeded(what, budget=budget, requested=requested)


@dataclass(frozen=True)
class Orientation:
    """arcs[i] = (tail, head) for edge i; a loop is (v, v)."""

    arcs: tuple[tuple[int, int], ...]

    @classmethod
    def canonical(cls, graph: Multigraph) -> Orientation:
        """Tail at the smaller endpoint."""
        return cls(tuple(graph.edges))

    @classmethod
    def random(cls, graph: Multigraph, seed: int = 0) -> Orientation:
        rng = random.Random(seed)
        return cls(tuple((u, v) if rng.random() < 0.5 else (v, u) for u, v in graph.edges))

    def reversed(self) -> Orientation:
        return Orientation(tuple((v, u) for u, v in self.arcs))

    def validate(self, graph: Multigraph) -> Orientation:
        if len(self.arcs) != graph.edge_count:
            raise InputError(
                f"orientation covers {len(self.arcs)} edges, graph has {graph.edge_count}",
                field="orientation",
            )
        for index, (tail, head) in enumerate(self.arcs):
            if (min(tail, head), max(tail, head)) != graph.edges[index]:
                raise InputError(
                    f"arc ({tail}, {head}) does not match edge {graph.edges[index]}",
                    field=f"orientation[{index}]",
                )
        return self


def count_proper_colorings(graph: Multigraph, n: int) -> int:
    """Maps V -> [n] with no monochromatic edge; a loop forces 0."""
    if n < 0:
        raise InputError(f"expected n >= 0, got {n}", field="n")
    if any(u == v for u, v in graph.edges):
        return 0
    _check_budget("colouring assignments", n**graph.vertex_count)
    edges = set(graph.edges)
    return sum(
        1
        for colouring in product(range(n), repeat=graph.vertex_count)
        if all(colouring[u] != colouring[v] for u, v in edges)
    )


def count_nz_flows(graph: Multigraph, n: int, orientation: Orientation | None = None) -> int:
    """Assignments E -> Z_n \\ {0} with zero net flow at every vertex."""
    if n < 1:
        raise InputError(f"expected n >= 1, got {n}", field="n")
    orientation = (orientation or Orientation.canonical(graph)).validate(graph)
    _check_budget("flow assignments", (n - 1) ** graph.edge_count)
    arcs = [(tail, head) for tail, head in orientation.arcs if tail != head]
    loops = graph.edge_count - len(arcs)

    count = 0
    for values in product(range(1, n), repeat=len(arcs)):
        net = [0] * graph.vertex_count
        for (tail, head), value in zip(arcs, values):
            net[tail] -= value
            net[head] += value
        if all(x % n == 0 for x in net):
            count += 1
    # Loops are unconstrained: any nonzero value conserves flow.
    return count * (n - 1) ** loops


def count_tensions(
    graph: Multigraph,
    m: int,
    residues: Iterable[int],
    orientation: Orientation | None = None,
) -> int:
    """
    Z_m-tensions of F with every edge value in S.

    Tensions are the coboundaries of vertex potentials p: V -> Z_m, the arc
    (t, h) getting p(h) - p(t). Each tension arises from exactly m^c(F)
    potentials, so the potential count is divided by m^c(F).

    Raises:
        InexactDivision: the potential count is not a multiple of m^c(F).
    """
    allowed = normalize_residues(m, residues)
    orientation = (orientation or Orientation.canonical(graph)).validate(graph)
    _check_budget("tension potentials", m**graph.vertex_count)

    potentials = 0
    for p in product(range(m), repeat=graph.vertex_count):
        if all((p[head] - p[tail]) % m in allowed for tail, head in orientation.arcs):
            potentials += 1

    classes = m ** component_count(graph)
    tensions, remainder = divmod(potentials, classes)
    if remainder:
        raise InexactDivision(
            f"{potentials} potentials are not a multiple of m^c = {classes}"
        )
    return tensions
