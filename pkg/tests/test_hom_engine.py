"""
Tests for homvariant.hom_engine module.

Run with:
    pytest tests/test_hom_engine.py -v
"""

from collections import defaultdict
from fractions import Fraction

import pytest

RANK_SUITE = ("K2", "K3", "K4", "P3", "C5", "Cay(Z5,{1,4})", "T(3,-2)")


def rank_target(name):
    """Twin-free rank targets by name; P3 enters twin-reduced."""
    from homvariant.weighted_target import (
        cayley_cyclic,
        complete_graph,
        cycle_graph,
        path_graph,
        tutte_target,
        twin_reduce,
    )

    builders = {
        "K2": lambda: complete_graph(2),
        "K3": lambda: complete_graph(3),
        "K4": lambda: complete_graph(4),
        "P3": lambda: twin_reduce(path_graph(3)),
        "C5": lambda: cycle_graph(5),
        "Cay(Z5,{1,4})": lambda: cayley_cyclic(5, {1, 4}),
        "T(3,-2)": lambda: tutte_target(3, -2),
    }
    return builders[name]()


# =============================================================================
# FIXTURES
# =============================================================================


@pytest.fixture(autouse=True)
def reset_settings():
    from homvariant.config import reset_settings

    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def targets():
    from homvariant.weighted_target import (
        WeightedGraph,
        cayley_cyclic,
        complete_graph,
        path_graph,
        tutte_target,
    )

    return [
        complete_graph(3),
        path_graph(3),
        cayley_cyclic(5, {1, 4}),
        tutte_target(2, "1/2"),
        WeightedGraph(2, ("2/3", -1), ((1, -2), (-2, 0))),
    ]


@pytest.fixture(scope="module")
def engine_suite():
    """Ten targets: unit and non-unit weights, loops, negative and fractional entries."""
    from homvariant.weighted_target import (
        WeightedGraph,
        cayley_cyclic,
        complete_graph,
        cycle_graph,
        path_graph,
        tutte_target,
    )

    return [
        complete_graph(2),
        complete_graph(3),
        complete_graph(4),
        path_graph(3),
        cycle_graph(5),
        cayley_cyclic(5, {1, 4}),
        tutte_target(3, -2),
        tutte_target(2, "1/2"),
        WeightedGraph(2, ("2/3", -1), ((1, -2), (-2, 0))),
        WeightedGraph(2, (2, 3), ((5, 1), (1, 7))),
    ]


# =============================================================================
# TESTS: COUNTING
# =============================================================================


class TestHom:
    """Test hom and h."""

    def test_triangle_into_triangle(self):
        from homvariant.hom_engine import h, hom, hom_fast
        from homvariant.multigraph import Multigraph
        from homvariant.weighted_target import complete_graph

        triangle, k3 = Multigraph.cycle(3), complete_graph(3)

        assert hom(triangle, k3) == 6
        assert hom_fast(triangle, k3) == 6
        assert h(triangle, k3) == 2

    def test_empty_graph_counts_once(self):
        from homvariant.hom_engine import hom, hom_fast
        from homvariant.multigraph import Multigraph
        from homvariant.weighted_target import complete_graph

        empty = Multigraph.from_edges(0, [])

        assert hom(empty, complete_graph(3)) == 1
        assert hom_fast(empty, complete_graph(3)) == 1

    def test_loop_and_weights(self):
        """A loop picks up the diagonal of B; vertex weights multiply in."""
        from homvariant.hom_engine import hom
        from homvariant.multigraph import Multigraph
        from homvariant.weighted_target import WeightedGraph

        target = WeightedGraph(2, (2, 3), ((5, 1), (1, 7)))

        assert hom(Multigraph.from_edges(1, [(0, 0)]), target) == 2 * 5 + 3 * 7

    def test_elimination_matches_direct_sum(self, targets):
        from homvariant.hom_engine import hom, hom_fast
        from homvariant.multigraph import enumerate_multigraphs

        for graph in enumerate_multigraphs(4, 4):
            for target in targets:
                assert hom_fast(graph, target) == hom(graph, target)

    @pytest.mark.acceptance
    def test_elimination_matches_direct_sum_up_to_six_edges(self, engine_suite):
        from homvariant.hom_engine import hom, hom_fast
        from homvariant.multigraph import enumerate_multigraphs

        for graph in enumerate_multigraphs(4, 6):
            for target in engine_suite:
                assert hom_fast(graph, target) == hom(graph, target), (graph, target.describe())

    def test_table_cap_falls_back(self, monkeypatch):
        from homvariant.config import reset_settings
        from homvariant.hom_engine import hom, hom_fast
        from homvariant.multigraph import Multigraph
        from homvariant.weighted_target import complete_graph

        monkeypatch.setenv("HOMVARIANT_ELIMINATION_TABLE_CAP", "1")
        reset_settings()
        k4 = Multigraph.complete(4)

        assert hom_fast(k4, complete_graph(4)) == hom(k4, complete_graph(4)) == 24

    def test_empty_target(self):
        from homvariant.hom_engine import hom_fast
        from homvariant.multigraph import Multigraph
        from homvariant.weighted_target import WeightedGraph

        empty_target = WeightedGraph(0, (), ())

        assert hom_fast(Multigraph.from_edges(0, []), empty_target) == 1
        assert hom_fast(Multigraph.path(1), empty_target) == 0

    def test_h_needs_nonzero_weight_sum(self):
        from homvariant.errors import ZeroWeightSum
        from homvariant.hom_engine import h
        from homvariant.multigraph import Multigraph
        from homvariant.weighted_target import WeightedGraph

        target = WeightedGraph(2, (1, -1), ((0, 1), (1, 0)))

        with pytest.raises(ZeroWeightSum):
            h(Multigraph.path(1), target)

    def test_h_is_multiplicative_over_components(self, targets):
        from homvariant.hom_engine import h
        from homvariant.multigraph import Multigraph

        triangle, edge = Multigraph.cycle(3), Multigraph.path(1)
        both = triangle.disjoint_union(edge)
        for target in targets:
            assert h(both, target) == h(triangle, target) * h(edge, target)


# =============================================================================
# TESTS: TENSORS
# =============================================================================


class TestHomTensor:
    """Test the tensor map and the bilinear forms."""

    def test_labelled_edge_tensor(self):
        from homvariant.hom_engine import hom_tensor
        from homvariant.multigraph import LabeledGraph
        from homvariant.weighted_target import complete_graph

        edge = LabeledGraph.from_edges(2, [(0, 1)], labels=[0, 1])
        tensor = hom_tensor(edge, complete_graph(3))

        assert tensor.entries == tuple(Fraction(int(i != j)) for i in range(3) for j in range(3))
        assert tensor.is_symmetric()

    def test_pairing_is_hom_of_gluing(self, targets):
        """pairing_a(p(F1), p(F2)) = hom(F1 · F2)."""
        from homvariant.hom_engine import hom, hom_tensor, pairing_a
        from homvariant.multigraph import LabeledGraph, glue

        first = LabeledGraph.from_edges(3, [(0, 2), (2, 1), (0, 1)], labels=[0, 1])
        second = LabeledGraph.from_edges(3, [(0, 2), (1, 2), (2, 2)], labels=[0, 1])
        glued = glue(first, second).graph
        for target in targets:
            value = pairing_a(hom_tensor(first, target), hom_tensor(second, target), target)
            assert value == hom(glued, target)

    @pytest.mark.acceptance
    @pytest.mark.parametrize("k", [1, 2])
    def test_pairing_is_hom_of_gluing_over_corpus(self, k, engine_suite):
        """Every glue of two corpus graphs that stays within (k+2 vertices, k+3 edges)."""
        from homvariant.hom_engine import hom_fast, hom_tensor, pairing
        from homvariant.multigraph import enumerate_labeled, glue

        max_vertices, max_edges = k + 2, k + 3
        buckets = defaultdict(list)
        for graph in enumerate_labeled(k, max_vertices, max_edges):
            buckets[(graph.vertex_count, graph.edge_count)].append(graph)
        instances = [
            (first, second)
            for (v1, e1), firsts in buckets.items()
            for (v2, e2), seconds in buckets.items()
            if v1 + v2 - k <= max_vertices and e1 + e2 <= max_edges
            for first in firsts
            for second in seconds
        ]
        assert instances

        for target in (t for t in engine_suite if t.has_unit_weights()):
            tensors = {
                id(graph): hom_tensor(graph, target)
                for group in buckets.values()
                for graph in group
            }
            for first, second in instances:
                value = pairing(tensors[id(first)], tensors[id(second)])
                glued = glue(first, second).graph
                assert value == hom_fast(glued, target), (first, second, target.describe())

    def test_pairing_of_labelled_edge_on_k3(self):
        from homvariant.hom_engine import hom_tensor, pairing, pairing_a
        from homvariant.multigraph import LabeledGraph
        from homvariant.weighted_target import complete_graph

        k3 = complete_graph(3)
        tensor = hom_tensor(LabeledGraph.from_edges(2, [(0, 1)], labels=[0]), k3)

        assert pairing_a(tensor, tensor, k3) == 12
        assert pairing(tensor, tensor) == 12

    def test_transpose_swaps_axes(self):
        from homvariant.hom_engine import HomTensor

        tensor = HomTensor(2, 2, (1, 2, 3, 4))

        assert tensor.transpose().entries == (1, 3, 2, 4)
        assert not tensor.is_symmetric()

    def test_transpose_of_graph_matches_tensor(self, targets):
        from homvariant.hom_engine import hom_tensor
        from homvariant.multigraph import LabeledGraph, transpose

        pendant = LabeledGraph.from_edges(3, [(0, 1), (0, 2)], labels=[0, 1])
        for target in targets:
            assert hom_tensor(transpose(pendant), target) == hom_tensor(pendant, target).transpose()

    def test_shape_mismatch(self):
        from homvariant.errors import ArityMismatch
        from homvariant.hom_engine import HomTensor, pairing

        with pytest.raises(ArityMismatch):
            pairing(HomTensor.ones(1, 2), HomTensor.ones(2, 2))

    def test_tensor_budget(self, monkeypatch):
        from homvariant.config import reset_settings
        from homvariant.errors import BudgetExceeded
        from homvariant.hom_engine import hom_tensor
        from homvariant.multigraph import LabeledGraph
        from homvariant.weighted_target import complete_graph

        monkeypatch.setenv("HOMVARIANT_TENSOR_BUDGET", "8")
        reset_settings()
        with pytest.raises(BudgetExceeded):
            hom_tensor(LabeledGraph.from_edges(2, [], labels=[0, 1]), complete_graph(3))

    def test_hom_tensors_are_invariant(self, targets):
        from homvariant.hom_engine import group_average, hom_tensor
        from homvariant.multigraph import LabeledGraph
        from homvariant.weighted_target import automorphisms

        pendant = LabeledGraph.from_edges(3, [(0, 1), (0, 2)], labels=[0, 1])
        for target in targets:
            tensor = hom_tensor(pendant, target)
            assert group_average(tensor, automorphisms(target)) == tensor

    def test_group_average_projects(self):
        from homvariant.hom_engine import HomTensor, group_average
        from homvariant.weighted_target import automorphisms, complete_graph

        group = automorphisms(complete_graph(3))
        averaged = group_average(HomTensor.basis(1, 3, (0,)), group)

        assert averaged.entries == (Fraction(1, 3),) * 3
        assert group_average(averaged, group) == averaged


# =============================================================================
# TESTS: RANK
# =============================================================================


class TestRank:
    """Test exact rank and the rank test."""

    def test_matrix_rank(self):
        from homvariant.hom_engine import matrix_rank

        rows = [[1, 2, 3], [2, 4, 6], [Fraction(1, 2), 0, 1]]

        assert matrix_rank(rows, 3) == 2
        assert matrix_rank([], 3) == 0

    def test_row_space_membership(self):
        from homvariant.hom_engine import RationalRowSpace

        space = RationalRowSpace(2)
        assert space.add([1, Fraction(1, 2)])
        assert not space.add([2, 1])
        assert space.contains([-4, -2])
        assert not space.contains([0, 1])
        assert space.rank == 1

    @pytest.mark.parametrize("k", [1, 2])
    @pytest.mark.parametrize("name", RANK_SUITE)
    def test_rank_equals_orbit_count(self, name, k):
        """The invariant tensors of a twin-free target are spanned by hom tensors."""
        from homvariant.hom_engine import rank_test

        report = rank_test(rank_target(name), k)

        assert report.rank == report.orbit_count
        assert report.saturated

    def test_triangle_rank(self):
        from homvariant.hom_engine import invariant_pairing_rank, rank_test
        from homvariant.weighted_target import complete_graph

        report = rank_test(complete_graph(3), 2)

        assert (report.rank, report.orbit_count) == (2, 2)
        assert len(report.spanning) == 2
        assert invariant_pairing_rank(complete_graph(3), 2) == 2

    def test_short_corpus_leaves_deficit(self):
        from homvariant.hom_engine import rank_test
        from homvariant.multigraph import LabeledGraph
        from homvariant.weighted_target import complete_graph

        corpus = [LabeledGraph.from_edges(2, [], labels=[0, 1])]
        report = rank_test(complete_graph(3), 2, corpus)

        assert report.rank == 1
        assert report.deficit == 1
        assert report.to_dict()["saturated"] is False

    def test_twins_rejected(self):
        from homvariant.errors import NotTwinFree
        from homvariant.hom_engine import rank_test
        from homvariant.weighted_target import path_graph

        with pytest.raises(NotTwinFree, match="twin"):
            rank_test(path_graph(3), 1)
