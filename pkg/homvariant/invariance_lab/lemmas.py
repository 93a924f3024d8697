"""
Finite checks of the two group-property lemmas on labelled-graph corpora.

    multiplicativity   h(F1)h(F2) = h(F1·F2)  for all F1, F2 ∈ G_1
                       holds iff Γ(a,B) is transitive
    flip invariance    h(F1·F2) = h(F1ᵀ·F2)   for all F1, F2 ∈ G_2
                       holds iff Γ(a,B) is generously transitive

HOW IT WORKS:
    Both identities are bilinear in the tensors p = hom_tensor(F, G):

        s·hom(F1·F2) - hom(F1)hom(F2) = s·<p1, p2>_a - <p1, 1>_a <p2, 1>_a
        hom(F1·F2) - hom(F1ᵀ·F2)      = <p1 - p1ᵀ, p2>_a

    where s = Σ a_i and <,>_a is pairing_a. So a corpus pair violates the
    identity iff some pair drawn from spanning subsets of the corpus does.
    The checks keep an incremental basis on each side, test every new basis
    element against the other side, and therefore cover all corpus pairs
    while evaluating only (rank × rank) pairings. A violation is confirmed by
    computing h directly on the glued graphs.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from homvariant.errors import HypothesisViolated
from homvariant.hom_engine import HomTensor, RationalRowSpace, h, hom_tensor, pairing_a
from homvariant.logger import logger, trace_computation
from homvariant.multigraph import LabeledGraph, dump_graph, enumerate_labeled, glue, transpose
from homvariant.rational import format_rational
from homvariant.weighted_target import (
    WeightedGraph,
    automorphisms,
    is_twin_free,
    twin_classes,
    twin_reduce,
)

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"
INCONCLUSIVE = "inconclusive"

LEMMA_CORPUS = (3, 3)
LEMMA_ESCALATED_CORPUS = (4, 5)


@dataclass(frozen=True)
class LemmaWitness:
    """A corpus pair on which the identity fails, with both sides."""

    first: LabeledGraph
    second: LabeledGraph
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> dict:
        return {
            "first": dump_graph(self.first),
            "second": dump_graph(self.second),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
        }


@dataclass
class LemmaReport:
    """Agreement between an identity over a corpus and a group property."""

    lemma: str
    target: str
    group_property: bool
    identity_held: bool = True
    pairs_tested: int = 0
    pairs_covered: int = 0
    corpus_bounds: tuple[int, int] | None = None
    escalated: bool = False
    witness: LemmaWitness | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.group_property and not self.identity_held:
            return INCONSISTENT
        if self.group_property == self.identity_held:
            return CONSISTENT
        return INCONCLUSIVE

    @property
    def consistent(self) -> bool:
        return self.status == CONSISTENT

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "target": self.target,
            "group_property": self.group_property,
            "identity_held": self.identity_held,
            "status": self.status,
            "pairs_tested": self.pairs_tested,
            "pairs_covered": self.pairs_covered,
            "corpus_bounds": list(self.corpus_bounds) if self.corpus_bounds else None,
            "escalated": self.escalated,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def prepare_target(target: WeightedGraph, reduce_twins: bool) -> WeightedGraph:
    """
    Enforce twin-freeness and Σ a_i ≠ 0, twin-reducing first if asked.

    Raises:
        HypothesisViolated: G has twins (and reduce_twins is off), the
            reduction is empty, or the weights sum to zero.
    """
    if not is_twin_free(target):
        if not reduce_twins:
            classes = [list(c) for c in twin_classes(target) if len(c) > 1]
            raise HypothesisViolated(
                f"target is not twin-free (classes {classes}); pass reduce_twins=True",
                field="target",
            )
        target = twin_reduce(target)
    if target.is_empty:
        raise HypothesisViolated("twin reduction cancelled every vertex", field="target")
    if target.weight_sum == 0:
        raise HypothesisViolated("vertex weights sum to zero", field="a")
    return target


@dataclass
class _Basis:
    """Incremental spanning subset: (graph, vector) pairs that raised the rank."""

    space: RationalRowSpace
    members: list[tuple[LabeledGraph, HomTensor]] = field(default_factory=list)

    def offer(self, graph: LabeledGraph, tensor: HomTensor) -> bool:
        if self.space.add(tensor.entries):
            self.members.append((graph, tensor))
            return True
        return False


Defect = Callable[[HomTensor, HomTensor], Fraction]


def search_bilinear_violation(
    corpus: Iterable[LabeledGraph],
    target: WeightedGraph,
    left_vector: Callable[[HomTensor], HomTensor],
    defect: Defect,
) -> tuple[tuple[LabeledGraph, LabeledGraph] | None, int, int]:
    """
    First corpus pair (F1, F2) with defect(left_vector(p1), p2) ≠ 0.

    Returns (pair or None, pairings evaluated, corpus size processed).
    """
    k_dim = None
    left = right = None
    tested = processed = 0

    for graph in corpus:
        processed += 1
        tensor = hom_tensor(graph, target)
        if k_dim is None:
            k_dim = len(tensor.entries)
            left, right = _Basis(RationalRowSpace(k_dim)), _Basis(RationalRowSpace(k_dim))

        vector = left_vector(tensor)
        if not vector.is_zero() and left.offer(graph, vector):
            for other, other_tensor in right.members:
                tested += 1
                if defect(vector, other_tensor):
                    return (graph, other), tested, processed
        if right.offer(graph, tensor):
            for other, other_vector in left.members:
                tested += 1
                if defect(other_vector, tensor):
                    return (other, graph), tested, processed
    return None, tested, processed


def _run(
    lemma: str,
    target: WeightedGraph,
    k: int,
    group_property: bool,
    corpus: Iterable[LabeledGraph] | None,
    left_vector: Callable[[HomTensor], HomTensor],
    defect: Defect,
    confirm: Callable[[LabeledGraph, LabeledGraph], tuple[Fraction, Fraction]],
) -> LemmaReport:
    report = LemmaReport(lemma=lemma, target=target.describe(), group_property=group_property)
    attempts: list[tuple[tuple[int, int] | None, Iterable[LabeledGraph]]]
    if corpus is not None:
        attempts = [(None, corpus)]
    else:
        attempts = [(LEMMA_CORPUS, enumerate_labeled(k, *LEMMA_CORPUS))]
        if not group_property:
            attempts.append(
                (LEMMA_ESCALATED_CORPUS, enumerate_labeled(k, *LEMMA_ESCALATED_CORPUS))
            )

    for attempt, (bounds, graphs) in enumerate(attempts):
        if attempt:
            report.escalated = True
            logger.info("lemma_corpus_escalated", lemma=lemma, bounds=list(bounds))
        if bounds is not None:
            report.corpus_bounds = bounds
        pair, tested, processed = search_bilinear_violation(graphs, target, left_vector, defect)
        report.pairs_tested += tested
        report.pairs_covered = processed * processed
        if pair is not None:
            lhs, rhs = confirm(*pair)
            report.identity_held = False
            report.witness = LemmaWitness(pair[0], pair[1], lhs, rhs)
            if lhs == rhs:
                report.notes.append("bilinear defect nonzero but direct h values agree")
            break

    log = logger.info if report.status == CONSISTENT else logger.warning
    summary = {key: value for key, value in report.to_dict().items() if key != "witness"}
    log("lemma_checked", **summary)
    return report


@trace_computation("invariance_lab.check_lemma1", instrumentation_type="lab")
def check_lemma1(
    target: WeightedGraph,
    corpus: Iterable[LabeledGraph] | None = None,
    *,
    reduce_twins: bool = False,
) -> LemmaReport:
    """
    Compare multiplicativity of h over 1-labelled pairs with transitivity.

    The default corpus is every 1-labelled graph within (3 vertices, 3
    edges); when G is not transitive and no violation shows up, the search
    escalates once to (4, 5).
    """
    target = prepare_target(target, reduce_twins)
    weight_sum = target.weight_sum
    ones = HomTensor.ones(1, target.n)

    def defect(p1: HomTensor, p2: HomTensor) -> Fraction:
        product = pairing_a(p1, ones, target) * pairing_a(p2, ones, target)
        return weight_sum * pairing_a(p1, p2, target) - product

    def confirm(first: LabeledGraph, second: LabeledGraph) -> tuple[Fraction, Fraction]:
        separate = h(first.graph, target) * h(second.graph, target)
        return separate, h(glue(first, second).graph, target)

    return _run(
        "lemma1",
        target,
        1,
        automorphisms(target).is_transitive(),
        corpus,
        lambda tensor: tensor,
        defect,
        confirm,
    )


@trace_computation("invariance_lab.check_lemma2", instrumentation_type="lab")
def check_lemma2(
    target: WeightedGraph,
    corpus: Iterable[LabeledGraph] | None = None,
    *,
    reduce_twins: bool = False,
) -> LemmaReport:
    """
    Compare flip invariance of h over 2-labelled pairs with generous
    transitivity. Corpus defaults and escalation as for check_lemma1.
    """
    target = prepare_target(target, reduce_twins)

    def confirm(first: LabeledGraph, second: LabeledGraph) -> tuple[Fraction, Fraction]:
        return (
            h(glue(first, second).graph, target),
            h(glue(transpose(first), second).graph, target),
        )

    return _run(
        "lemma2",
        target,
        2,
        automorphisms(target).is_generously_transitive(),
        corpus,
        lambda tensor: tensor - tensor.transpose(),
        lambda d1, p2: pairing_a(d1, p2, target),
        confirm,
    )
