"""
Weighted targets G(a, B), twin reduction and automorphism groups.

USAGE:
    from homvariant.weighted_target import automorphisms, cayley_cyclic, tutte_target

    c5 = cayley_cyclic(5, {1, 4})
    group = automorphisms(c5)
    group.order                         # 10
    group.is_generously_transitive()    # True

    twin_reduce(tutte_target(3, 1))     # one vertex of weight 3, B = [[1]]

ENVIRONMENT VARIABLES:
    HOMVARIANT_AUT_SCAN_BOUND: Max n for automorphisms_bruteforce (default: 10)
    HOMVARIANT_AUT_SEARCH_BOUND: Max n for automorphisms (default: 16)
    HOMVARIANT_MAX_GROUP_ORDER: Max group order listed (default: 200000)
    HOMVARIANT_TENSOR_BUDGET: Max n^k for orbits_on_maps (default: 1000000)
"""

from .graph import (
    WeightedGraph,
    cayley_cyclic,
    complete_graph,
    cycle_graph,
    from_multigraph,
    from_networkx,
    from_simple_graph,
    is_symmetric_set,
    normalize_residues,
    path_graph,
    tutte_target,
)
from .group import (
    AutomorphismGroup,
    Permutation,
    automorphisms,
    automorphisms_bruteforce,
    orbit_count,
    orbits_on_maps,
)
from .io import (
    dump_weighted_graph,
    parse_weighted_graph,
    read_weighted_graph,
    weighted_graph_to_dict,
)
from .twins import TwinReduction, is_twin_free, twin_classes, twin_reduce, twin_reduction

__all__ = [
    # Targets
    "WeightedGraph",
    "from_simple_graph",
    "from_multigraph",
    "from_networkx",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "tutte_target",
    "cayley_cyclic",
    "normalize_residues",
    "is_symmetric_set",
    # Groups
    "Permutation",
    "AutomorphismGroup",
    "automorphisms",
    "automorphisms_bruteforce",
    "orbit_count",
    "orbits_on_maps",
    # Twins
    "TwinReduction",
    "twin_classes",
    "twin_reduce",
    "twin_reduction",
    "is_twin_free",
    # Text format
    "parse_weighted_graph",
    "read_weighted_graph",
    "weighted_graph_to_dict",
    "dump_weighted_graph",
]
