"""
Tutte, chromatic and flow polynomials with brute-force counting oracles.

USAGE:
    from homvariant.matroid_poly import tutte, verify_tutte_hom_identity
    from homvariant.multigraph import Multigraph

    str(tutte(Multigraph.cycle(3)))                       # "x^2 + x + y"
    report = verify_tutte_hom_identity(Multigraph.cycle(3), n=3, y=-2)
    report.hom_side, report.tutte_side                    # (-54, -54)

ENVIRONMENT VARIABLES:
    HOMVARIANT_TUTTE_SUBSET_BOUND: Max edges for subset expansion (default: 20)
    HOMVARIANT_TUTTE_AUTO_SUBSET: "auto" uses subset expansion up to this (default: 12)
    HOMVARIANT_TUTTE_RECURSION_BUDGET: Max deletion-contraction calls (default: 2000000)
    HOMVARIANT_ENUMERATION_BUDGET: Max assignments for the oracles (default: 20000000)
"""

from .identity import IdentityReport, verify_tutte_hom_identity
from .oracles import Orientation, count_nz_flows, count_proper_colorings, count_tensions
from .poly import BivariatePoly
from .tutte import (
    METHODS,
    chromatic_polynomial,
    chromatic_value,
    flow_polynomial,
    flow_value,
    tutte,
    tutte_deletion_contraction,
    tutte_subset_expansion,
)

__all__ = [
    # Polynomials
    "BivariatePoly",
    "METHODS",
    "tutte",
    "tutte_subset_expansion",
    "tutte_deletion_contraction",
    "chromatic_value",
    "chromatic_polynomial",
    "flow_value",
    "flow_polynomial",
    # Oracles
    "Orientation",
    "count_proper_colorings",
    "count_nz_flows",
    "count_tensions",
    # Identity
    "IdentityReport",
    "verify_tutte_hom_identity",
]
