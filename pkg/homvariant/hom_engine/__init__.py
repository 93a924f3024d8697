"""
Exact weighted homomorphism counting and the labelled-graph tensor map.

USAGE:
    from homvariant.hom_engine import h, hom_fast, hom_tensor, rank_test
    from homvariant.multigraph import Multigraph
    from homvariant.weighted_target import complete_graph

    hom_fast(Multigraph.cycle(3), complete_graph(3))    # Fraction(6, 1)
    h(Multigraph.cycle(3), complete_graph(3))           # Fraction(2, 1)

    report = rank_test(complete_graph(3), k=2)
    report.rank, report.orbit_count                      # (2, 2)

ENVIRONMENT VARIABLES:
    HOMVARIANT_ELIMINATION_TABLE_CAP: Max entries of one elimination table (default: 1000000)
    HOMVARIANT_TENSOR_BUDGET: Max entries n^k of a hom tensor (default: 1000000)
"""

from .counting import Factor, build_factors, eliminate, h, hom, hom_fast, target_weights
from .rank import (
    RankReport,
    RationalRowSpace,
    default_corpus,
    invariant_pairing_rank,
    invariant_rank,
    matrix_rank,
    rank_test,
)
from .tensor import (
    HomTensor,
    group_average,
    hom_tensor,
    label_weights,
    map_index,
    pairing,
    pairing_a,
)

__all__ = [
    # Counting
    "hom",
    "hom_fast",
    "h",
    "Factor",
    "build_factors",
    "eliminate",
    "target_weights",
    # Tensors
    "HomTensor",
    "hom_tensor",
    "pairing",
    "pairing_a",
    "label_weights",
    "group_average",
    "map_index",
    # Rank
    "RationalRowSpace",
    "RankReport",
    "matrix_rank",
    "default_corpus",
    "rank_test",
    "invariant_rank",
    "invariant_pairing_rank",
]
