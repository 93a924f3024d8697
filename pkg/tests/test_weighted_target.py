"""
Tests for homvariant.weighted_target module.

Run with:
    pytest tests/test_weighted_target.py -v
"""

import random
from fractions import Fraction

import pytest

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
def target_suite():
    """Small targets with different group structure."""
    from homvariant.weighted_target import (
        WeightedGraph,
        cayley_cyclic,
        complete_graph,
        cycle_graph,
        path_graph,
        tutte_target,
    )

    return [
        complete_graph(3),
        path_graph(3),
        path_graph(4),
        cycle_graph(4),
        cayley_cyclic(5, {1, 4}),
        cayley_cyclic(6, {0, 1, 5}),
        tutte_target(3, -2),
        WeightedGraph(3, (1, 2, 1), ((0, 1, 0), (1, 0, 1), (0, 1, 0))),
    ]


# =============================================================================
# TESTS: TARGETS
# =============================================================================


class TestWeightedGraph:
    """Test validation and constructors."""

    def test_values_become_fractions(self):
        from homvariant.weighted_target import WeightedGraph

        target = WeightedGraph(2, ("1/2", 3), (("0", "-1/3"), ("-1/3", 1)))

        assert target.a == (Fraction(1, 2), Fraction(3))
        assert target.B[0][1] == Fraction(-1, 3)
        assert target.weight_sum == Fraction(7, 2)

    def test_asymmetric_matrix_rejected(self):
        from homvariant.errors import InputError
        from homvariant.weighted_target import WeightedGraph

        with pytest.raises(InputError, match="not symmetric") as excinfo:
            WeightedGraph(2, (1, 1), ((0, 1), (2, 0)))
        assert excinfo.value.field == "B[0][1]"

    def test_zero_vertex_weight_rejected(self):
        from homvariant.errors import InputError
        from homvariant.weighted_target import WeightedGraph

        with pytest.raises(InputError, match="nonzero"):
            WeightedGraph(2, (1, 0), ((0, 1), (1, 0)))

    def test_floats_rejected(self):
        from homvariant.errors import InputError
        from homvariant.weighted_target import WeightedGraph

        with pytest.raises(InputError, match="exact rational"):
            WeightedGraph(1, ("0.5",), ((0,),))

    def test_tutte_target(self):
        from homvariant.weighted_target import tutte_target

        target = tutte_target(3, -2)

        assert target.has_unit_weights()
        assert target.B[0] == (Fraction(-2), Fraction(1), Fraction(1))

    def test_simple_graph_rejects_loops(self):
        from homvariant.errors import InputError
        from homvariant.weighted_target import from_simple_graph

        with pytest.raises(InputError, match="no loops"):
            from_simple_graph([[1, 0], [0, 0]])

    def test_from_multigraph_counts_parallel_edges(self):
        from homvariant.multigraph import Multigraph
        from homvariant.weighted_target import from_multigraph

        target = from_multigraph(Multigraph.from_edges(2, [(0, 1), (0, 1), (1, 1)]))

        assert target.B == ((0, 2), (2, 1))

    def test_cayley_needs_symmetric_set(self):
        from homvariant.errors import InputError
        from homvariant.weighted_target import cayley_cyclic, is_symmetric_set

        assert not is_symmetric_set(5, {1})
        with pytest.raises(InputError, match="not closed under negation") as excinfo:
            cayley_cyclic(5, {1})
        assert excinfo.value.field == "set"

    def test_cayley_zero_gives_loops(self):
        from homvariant.weighted_target import cayley_cyclic

        target = cayley_cyclic(4, {0, 1, 3})

        assert all(target.B[i][i] == 1 for i in range(4))
        assert target.B[0][2] == 0


# =============================================================================
# TESTS: AUTOMORPHISMS
# =============================================================================


class TestAutomorphisms:
    """Test the automorphism group and its action."""

    def test_search_matches_full_scan(self, target_suite):
        from homvariant.weighted_target import automorphisms, automorphisms_bruteforce

        for target in target_suite:
            group = automorphisms(target)
            oracle = automorphisms_bruteforce(target)
            assert set(group.elements) == set(oracle.elements)
            assert group.self_check()

    def test_identity_listed_first(self):
        from homvariant.weighted_target import Permutation, automorphisms, complete_graph

        group = automorphisms(complete_graph(4))

        assert group.elements[0] == Permutation.identity(4)
        assert group.order == 24

    def test_five_cycle(self):
        from homvariant.weighted_target import automorphisms, cayley_cyclic

        group = automorphisms(cayley_cyclic(5, {1, 4}))

        assert group.order == 10
        assert group.is_transitive()
        assert group.is_generously_transitive()

    def test_path_not_transitive(self):
        from homvariant.weighted_target import automorphisms, path_graph

        group = automorphisms(path_graph(3))

        assert group.order == 2
        assert group.orbits() == [(0, 2), (1,)]
        assert not group.is_transitive()
        assert (0, 1) in group.unswappable_pairs()

    def test_vertex_weights_break_symmetry(self):
        from homvariant.weighted_target import WeightedGraph, automorphisms

        target = WeightedGraph(2, (1, 2), ((0, 1), (1, 0)))

        assert automorphisms(target).order == 1

    def test_search_bound(self, monkeypatch):
        from homvariant.config import reset_settings
        from homvariant.errors import BudgetExceeded
        from homvariant.weighted_target import automorphisms, complete_graph

        monkeypatch.setenv("HOMVARIANT_AUT_SEARCH_BOUND", "3")
        reset_settings()
        with pytest.raises(BudgetExceeded):
            automorphisms(complete_graph(4))

    def test_orbit_count_burnside(self):
        from homvariant.weighted_target import complete_graph, orbit_count, path_graph

        assert orbit_count(complete_graph(3), 2) == 2
        assert orbit_count(complete_graph(3), 0) == 1
        assert orbit_count(path_graph(3), 1) == 2

    def test_orbits_on_maps_match_count(self, target_suite):
        from homvariant.weighted_target import orbit_count, orbits_on_maps

        for target in target_suite:
            for k in (1, 2):
                assert len(orbits_on_maps(target, k)) == orbit_count(target, k)

    def test_orbits_on_maps_path(self):
        from homvariant.weighted_target import orbits_on_maps, path_graph

        assert orbits_on_maps(path_graph(3), 1) == [((0,), (2,)), ((1,),)]


# =============================================================================
# TESTS: TWINS
# =============================================================================


class TestTwinReduction:
    """Test twin classes and their merging."""

    def test_all_twins_merge(self):
        from homvariant.weighted_target import twin_reduction, tutte_target

        reduction = twin_reduction(tutte_target(3, 1))

        assert reduction.target.n == 1
        assert reduction.target.a == (Fraction(3),)
        assert reduction.target.B == ((Fraction(1),),)
        assert reduction.kept == ((0, 1, 2),)

    def test_cancelling_class_dropped(self):
        from homvariant.weighted_target import WeightedGraph, twin_reduction

        reduction = twin_reduction(WeightedGraph(2, (1, -1), ((1, 1), (1, 1))))

        assert reduction.is_empty
        assert reduction.dropped == ((0, 1),)

    def test_cancelling_class_kills_nonempty_graphs(self):
        from homvariant.hom_engine import hom
        from homvariant.multigraph import enumerate_multigraphs
        from homvariant.weighted_target import WeightedGraph, twin_reduce

        target = WeightedGraph(2, (1, -1), ((1, 1), (1, 1)))
        reduced = twin_reduce(target)
        for graph in enumerate_multigraphs(3, 3):
            if graph.vertex_count == 0:
                continue
            assert hom(graph, reduced) == 0
            assert hom(graph, target) == 0

    def test_path_ends_are_twins(self):
        from homvariant.weighted_target import is_twin_free, path_graph, twin_classes, twin_reduce

        p3 = path_graph(3)

        assert twin_classes(p3) == [(0, 2), (1,)]
        assert not is_twin_free(p3)
        reduced = twin_reduce(p3)
        assert reduced.a == (Fraction(2), Fraction(1))
        assert is_twin_free(reduced)

    def test_hom_preserved(self, target_suite):
        from homvariant.hom_engine import hom
        from homvariant.multigraph import Multigraph
        from homvariant.weighted_target import twin_reduce

        graphs = [Multigraph.cycle(3), Multigraph.path(3), Multigraph.from_edges(2, [(0, 0)])]
        for target in target_suite:
            reduced = twin_reduce(target)
            for graph in graphs:
                assert hom(graph, reduced) == hom(graph, target)

    def test_hom_preserved_with_injected_twins(self):
        from homvariant.hom_engine import hom
        from homvariant.multigraph import enumerate_multigraphs
        from homvariant.weighted_target import twin_classes, twin_reduce

        graphs = list(enumerate_multigraphs(3, 4))
        for seed in range(50):
            rng = random.Random(seed)
            target = _with_injected_twins(rng)
            graph = rng.choice(graphs)

            assert any(len(members) > 1 for members in twin_classes(target))
            assert hom(graph, twin_reduce(target)) == hom(graph, target), seed


def _with_injected_twins(rng):
    """A random symmetric target plus copies of some of its vertices."""
    from homvariant.weighted_target import WeightedGraph

    values = [Fraction(-1), Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2)]
    weights = [Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 3)]
    n = rng.randint(1, 3)
    B = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            B[i][j] = B[j][i] = rng.choice(values)
    a = [rng.choice(weights) for _ in range(n)]

    for _ in range(rng.randint(1, 2)):
        source = rng.randrange(len(a))
        for row in B:
            row.append(row[source])
        B.append(list(B[source]))
        a.append(rng.choice(weights))
    return WeightedGraph(len(a), tuple(a), tuple(tuple(row) for row in B))


# =============================================================================
# TESTS: FILE FORMAT
# =============================================================================


class TestWeightedGraphFiles:
    """Test the JSON text format."""

    def test_round_trip(self):
        from homvariant.weighted_target import (
            WeightedGraph,
            dump_weighted_graph,
            parse_weighted_graph,
        )

        target = WeightedGraph(2, ("1/2", 3), ((0, "-2/3"), ("-2/3", 5)))

        assert parse_weighted_graph(dump_weighted_graph(target)) == target

    def test_weights_default_to_one(self):
        from homvariant.weighted_target import parse_weighted_graph

        target = parse_weighted_graph('{"n": 2, "B": [[0, 1], [1, 0]]}')

        assert target.has_unit_weights()

    def test_error_names_line(self):
        from homvariant.errors import InputError
        from homvariant.weighted_target import parse_weighted_graph

        text = '{\n  "n": 2,\n  "a": ["1", "1"],\n  "B": [["0", "1"], ["2", "0"]]\n}'
        with pytest.raises(InputError) as excinfo:
            parse_weighted_graph(text)

        assert excinfo.value.field == "B[0][1]"
        assert excinfo.value.line == 4

    def test_read_missing_file(self, tmp_path):
        from homvariant.errors import InputError
        from homvariant.weighted_target import read_weighted_graph

        with pytest.raises(InputError):
            read_weighted_graph(tmp_path / "missing.json")
