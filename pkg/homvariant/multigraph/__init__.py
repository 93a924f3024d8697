"""
Multigraphs, k-labelled graphs, the gluing algebra and cycle matroids.

USAGE:
    from homvariant.multigraph import LabeledGraph, Multigraph, glue, circuits

    triangle = Multigraph.cycle(3)
    circuits(triangle)                      # [frozenset({0, 1, 2})]

    half_edge = LabeledGraph.from_edges(2, [(0, 1)], labels=[0])
    glue(half_edge, half_edge).graph        # path on 3 vertices

    f, f_flipped = whitney_flip(f1, f2)     # same cycle matroid, identity edge map
    matroid_isomorphic(f, f_flipped)

ENVIRONMENT VARIABLES:
    HOMVARIANT_CIRCUIT_EDGE_BOUND: Max edges for circuit listing (default: 12)
    HOMVARIANT_MATROID_ISO_EDGE_BOUND: Max edges for matroid isomorphism search (default: 8)
"""

from .algebra import (
    Decomposition,
    decompose,
    glue,
    identify_vertices,
    labeled_subgraph,
    separation_groups,
    split_at_cut,
    transpose,
    whitney_flip,
)
from .enumerate import enumerate_labeled, enumerate_multigraphs, enumerate_simple_graphs
from .graph import LabeledGraph, Multigraph, UnionFind, component_count, components, rank
from .io import (
    dump_graph,
    graph_to_dict,
    parse_labeled_graph,
    parse_multigraph,
    read_labeled_graph,
    read_multigraph,
)
from .matroid import (
    CycleMatroidView,
    circuits,
    cycle_matroid,
    is_matroid_isomorphism,
    matroid_isomorphic,
    preserves_bases,
)

__all__ = [
    # Types
    "Multigraph",
    "LabeledGraph",
    "CycleMatroidView",
    "Decomposition",
    "UnionFind",
    # Connectivity
    "components",
    "component_count",
    "rank",
    # Gluing algebra
    "glue",
    "transpose",
    "whitney_flip",
    "identify_vertices",
    "split_at_cut",
    "decompose",
    "separation_groups",
    "labeled_subgraph",
    # Cycle matroid
    "circuits",
    "cycle_matroid",
    "matroid_isomorphic",
    "is_matroid_isomorphism",
    "preserves_bases",
    # Corpora
    "enumerate_multigraphs",
    "enumerate_labeled",
    "enumerate_simple_graphs",
    # Text format
    "parse_labeled_graph",
    "parse_multigraph",
    "read_labeled_graph",
    "read_multigraph",
    "graph_to_dict",
    "dump_graph",
]
