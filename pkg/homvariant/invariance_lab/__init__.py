"""
Finite verification of the group-property characterizations of h(·, G).

USAGE:
    from homvariant.invariance_lab import check_lemma2, check_theorem1, exhaustive_survey
    from homvariant.weighted_target import complete_graph, path_graph

    check_lemma2(complete_graph(3)).status                      # "consistent"
    check_lemma2(path_graph(3), reduce_twins=True).witness      # LemmaWitness(...)

    verdict = check_theorem1(path_graph(3))
    verdict.generously_transitive, verdict.witness is not None  # (False, True)

    rows = exhaustive_survey(4, jobs=2)

ENVIRONMENT VARIABLES:
    HOMVARIANT_PAIR_COUNT: Generated 2-isomorphic pairs per theorem check (default: 200)
    HOMVARIANT_SEED: Default seed for generated pairs (default: 0)
    HOMVARIANT_CIRCUIT_EDGE_BOUND: Max edges for circuit checks on witnesses (default: 12)
    HOMVARIANT_MATROID_ISO_EDGE_BOUND: Max edges for the matroid isomorphism search (default: 8)
"""

from .lemmas import (
    CONSISTENT,
    INCONCLUSIVE,
    INCONSISTENT,
    LemmaReport,
    LemmaWitness,
    check_lemma1,
    check_lemma2,
    prepare_target,
    search_bilinear_violation,
)
from .pairs import (
    OPERATIONS,
    PairBounds,
    TwoIsomorphicPair,
    applicable_operations,
    apply_operations,
    generate_two_isomorphic_pairs,
    random_multigraph,
)
from .survey import (
    SurveyRow,
    exhaustive_survey,
    graph6_id,
    graph_name,
    render_json_lines,
    render_table,
    survey_row,
)
from .theorem import (
    ESCALATED_WITNESS_BOUNDS,
    WITNESS_BOUNDS,
    InvarianceVerdict,
    TheoremWitness,
    TwinLemmaReport,
    check_theorem1,
    check_twin_lemma,
    find_flip_witness,
)

__all__ = [
    # Verdicts
    "CONSISTENT",
    "INCONSISTENT",
    "INCONCLUSIVE",
    # Lemmas
    "LemmaReport",
    "LemmaWitness",
    "check_lemma1",
    "check_lemma2",
    "prepare_target",
    "search_bilinear_violation",
    # 2-isomorphic pairs
    "OPERATIONS",
    "PairBounds",
    "TwoIsomorphicPair",
    "applicable_operations",
    "apply_operations",
    "random_multigraph",
    "generate_two_isomorphic_pairs",
    # Theorem
    "WITNESS_BOUNDS",
    "ESCALATED_WITNESS_BOUNDS",
    "InvarianceVerdict",
    "TheoremWitness",
    "TwinLemmaReport",
    "check_theorem1",
    "check_twin_lemma",
    "find_flip_witness",
    # Survey
    "SurveyRow",
    "survey_row",
    "exhaustive_survey",
    "graph6_id",
    "graph_name",
    "render_table",
    "render_json_lines",
]
