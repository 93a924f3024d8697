"""
Tests for homvariant.matroid_poly module.

Run with:
    pytest tests/test_matroid_poly.py -v
"""

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
def small_graphs():
    """Every multigraph with at most 3 vertices and 4 edges."""
    from homvariant.multigraph import enumerate_multigraphs

    return list(enumerate_multigraphs(3, 4))


@pytest.fixture(scope="module")
def identity_corpus():
    """Every multigraph with at most 4 vertices and 6 edges."""
    from homvariant.multigraph import enumerate_multigraphs

    return list(enumerate_multigraphs(4, 6))


# =============================================================================
# TESTS: POLYNOMIALS
# =============================================================================


class TestBivariatePoly:
    """Test the exact polynomial type."""

    def test_arithmetic_and_text(self):
        from homvariant.matroid_poly import BivariatePoly

        x, y = BivariatePoly.x(), BivariatePoly.y()

        assert str((x + 1) ** 2) == "x^2 + 2*x + 1"
        assert str(x * y - Fraction(1, 2)) == "x*y - 1/2"
        assert str(x - x) == "0"
        assert (x + y).degree() == (1, 1)

    def test_evaluate_and_substitute(self):
        from homvariant.matroid_poly import BivariatePoly

        x, y = BivariatePoly.x(), BivariatePoly.y()
        poly = x**2 + x + y

        assert poly.evaluate(0, -2) == -2
        assert poly.substitute(1 - x, BivariatePoly.constant(0)) == x**2 - 3 * x + 2

    def test_dict_round_trip(self):
        from homvariant.matroid_poly import BivariatePoly

        poly = BivariatePoly({(2, 0): 1, (0, 1): Fraction(-3, 4)})

        assert poly.to_dict()["terms"][0] == {"x": 2, "y": 0, "c": "1"}
        assert BivariatePoly.from_dict(poly.to_dict()) == poly

    def test_backed_by_sympy_over_rationals(self):
        import sympy as sp

        from homvariant.matroid_poly import BivariatePoly

        x, y = sp.symbols("x y")
        poly = BivariatePoly.x() ** 2 + BivariatePoly.y() * Fraction(1, 3)

        assert poly.sympy_poly.domain == sp.QQ
        assert poly.sympy_poly == sp.Poly(x**2 + sp.Rational(1, 3) * y, x, y, domain=sp.QQ)
        assert poly.evaluate(Fraction(1, 2), 3) == Fraction(5, 4)
        assert isinstance(poly.evaluate(1, 1), Fraction)

    def test_zero_polynomial(self):
        from homvariant.matroid_poly import BivariatePoly

        zero = BivariatePoly()

        assert zero.is_zero()
        assert zero.degree() == (0, 0)
        assert zero.evaluate(3, 4) == 0
        assert zero.to_dict() == {"terms": []}

    def test_negative_exponent_rejected(self):
        from homvariant.errors import InputError
        from homvariant.matroid_poly import BivariatePoly

        with pytest.raises(InputError, match="negative exponent"):
            BivariatePoly({(-1, 0): 1})


# =============================================================================
# TESTS: TUTTE POLYNOMIAL
# =============================================================================


class TestTutte:
    """Test both Tutte methods and the specializations."""

    def test_triangle(self):
        from homvariant.matroid_poly import tutte
        from homvariant.multigraph import Multigraph

        assert str(tutte(Multigraph.cycle(3))) == "x^2 + x + y"

    def test_base_cases(self):
        from homvariant.matroid_poly import tutte
        from homvariant.multigraph import Multigraph

        assert str(tutte(Multigraph.from_edges(1, [(0, 0)]))) == "y"
        assert str(tutte(Multigraph.path(1))) == "x"
        assert str(tutte(Multigraph.from_edges(3, []))) == "1"
        assert str(tutte(Multigraph.cycle(2))) == "x + y"

    def test_methods_agree(self):
        from homvariant.matroid_poly import tutte_deletion_contraction, tutte_subset_expansion
        from homvariant.multigraph import Multigraph, enumerate_multigraphs

        graphs = list(enumerate_multigraphs(4, 5)) + [Multigraph.complete(4)]
        for graph in graphs:
            assert tutte_subset_expansion(graph) == tutte_deletion_contraction(graph)

    @pytest.mark.acceptance
    def test_methods_agree_up_to_eight_edges(self):
        from homvariant.matroid_poly import tutte_deletion_contraction, tutte_subset_expansion
        from homvariant.multigraph import enumerate_multigraphs

        for graph in enumerate_multigraphs(4, 8):
            assert tutte_subset_expansion(graph) == tutte_deletion_contraction(graph), graph

    def test_counts_spanning_trees(self):
        """T(F; 1, 1) counts spanning forests of maximal rank: 16 for K4."""
        from homvariant.matroid_poly import tutte
        from homvariant.multigraph import Multigraph

        assert tutte(Multigraph.complete(4)).evaluate(1, 1) == 16

    def test_unknown_method(self):
        from homvariant.errors import InputError
        from homvariant.matroid_poly import tutte
        from homvariant.multigraph import Multigraph

        with pytest.raises(InputError, match="unknown method"):
            tutte(Multigraph.cycle(3), method="matrix")

    def test_subset_bound(self, monkeypatch):
        from homvariant.config import reset_settings
        from homvariant.errors import BudgetExceeded
        from homvariant.matroid_poly import tutte
        from homvariant.multigraph import Multigraph

        monkeypatch.setenv("HOMVARIANT_TUTTE_SUBSET_BOUND", "4")
        reset_settings()
        with pytest.raises(BudgetExceeded):
            tutte(Multigraph.complete(4), method="subset")

    def test_chromatic_matches_colourings(self, small_graphs):
        from homvariant.matroid_poly import chromatic_value, count_proper_colorings, tutte

        for graph in small_graphs:
            poly = tutte(graph)
            for n in range(4):
                assert chromatic_value(graph, n, poly) == count_proper_colorings(graph, n)

    def test_flow_matches_flow_count(self, small_graphs):
        from homvariant.matroid_poly import count_nz_flows, flow_value, tutte

        for graph in small_graphs:
            poly = tutte(graph)
            for n in range(1, 5):
                assert flow_value(graph, n, poly) == count_nz_flows(graph, n)

    def test_specialization_polynomials(self):
        from homvariant.matroid_poly import chromatic_polynomial, flow_polynomial
        from homvariant.multigraph import Multigraph

        triangle = Multigraph.cycle(3)

        assert str(chromatic_polynomial(triangle)) == "x^3 - 3*x^2 + 2*x"
        assert str(flow_polynomial(triangle)) == "x - 1"


# =============================================================================
# TESTS: ORACLES
# =============================================================================


class TestOracles:
    """Test the brute-force counts."""

    def test_loop_kills_colourings(self):
        from homvariant.matroid_poly import count_proper_colorings
        from homvariant.multigraph import Multigraph

        assert count_proper_colorings(Multigraph.from_edges(2, [(0, 1), (1, 1)]), 5) == 0

    def test_flow_count_ignores_orientation(self, small_graphs):
        from homvariant.matroid_poly import Orientation, count_nz_flows

        for seed, graph in enumerate(small_graphs):
            random_arcs = Orientation.random(graph, seed)
            assert count_nz_flows(graph, 3, random_arcs) == count_nz_flows(graph, 3)

    def test_orientation_must_match_edges(self):
        from homvariant.errors import InputError
        from homvariant.matroid_poly import Orientation, count_nz_flows
        from homvariant.multigraph import Multigraph

        with pytest.raises(InputError, match="does not match"):
            count_nz_flows(Multigraph.cycle(3), 3, Orientation(((0, 1), (1, 2), (0, 1))))

    def test_nowhere_zero_tensions_are_h(self, small_graphs):
        """Tensions avoiding 0 in Z_n number h(F, K_n)."""
        from homvariant.hom_engine import h
        from homvariant.matroid_poly import count_tensions
        from homvariant.weighted_target import complete_graph

        for graph in small_graphs:
            for n in (2, 3):
                assert count_tensions(graph, n, range(1, n)) == h(graph, complete_graph(n))

    def test_all_tensions(self, small_graphs):
        """With S = Z_m every coboundary counts: m^r(F) tensions."""
        from homvariant.matroid_poly import count_tensions
        from homvariant.multigraph import rank

        for graph in small_graphs:
            assert count_tensions(graph, 3, range(3)) == 3 ** rank(graph)

    @pytest.mark.acceptance
    def test_tension_correspondence_up_to_five_edges(self):
        """count_tensions(F, n, Z_n minus 0) = h(F, K_n) = chromatic value / n^c(F)."""
        from homvariant.hom_engine import h
        from homvariant.matroid_poly import chromatic_value, count_tensions
        from homvariant.multigraph import component_count, enumerate_multigraphs, rank
        from homvariant.weighted_target import complete_graph

        for graph in enumerate_multigraphs(4, 5):
            for n in (2, 3):
                tensions = count_tensions(graph, n, range(1, n))
                assert tensions == h(graph, complete_graph(n)), (graph, n)
                expected = chromatic_value(graph, n) / n ** component_count(graph)
                assert tensions == expected, (graph, n)
                assert count_tensions(graph, n, range(n)) == n ** rank(graph)

    def test_symmetric_set_ignores_orientation(self, small_graphs):
        from homvariant.matroid_poly import Orientation, count_tensions

        for graph in small_graphs:
            reversed_arcs = Orientation.canonical(graph).reversed()
            assert count_tensions(graph, 5, {1, 4}, reversed_arcs) == count_tensions(
                graph, 5, {1, 4}
            )

    def test_enumeration_budget(self, monkeypatch):
        from homvariant.config import reset_settings
        from homvariant.errors import BudgetExceeded
        from homvariant.matroid_poly import count_proper_colorings
        from homvariant.multigraph import Multigraph

        monkeypatch.setenv("HOMVARIANT_ENUMERATION_BUDGET", "100")
        reset_settings()
        with pytest.raises(BudgetExceeded):
            count_proper_colorings(Multigraph.path(4), 3)


# =============================================================================
# TESTS: HOM = TUTTE IDENTITY
# =============================================================================


class TestTutteHomIdentity:
    """Test hom(F, G(1, (y-1)I + J)) against the Tutte evaluation."""

    def test_triangle_anchor(self):
        from homvariant.matroid_poly import verify_tutte_hom_identity
        from homvariant.multigraph import Multigraph

        report = verify_tutte_hom_identity(Multigraph.cycle(3), n=3, y=-2)

        assert report.hom_side == report.tutte_side == -54
        assert report.special_case == "flow"
        assert report.checks == {"flow_value": True, "nowhere_zero_flows": True}
        assert report.holds

    def test_chromatic_case(self):
        from homvariant.matroid_poly import verify_tutte_hom_identity
        from homvariant.multigraph import Multigraph

        report = verify_tutte_hom_identity(Multigraph.cycle(3), n=3, y=0)

        assert report.hom_side == 6
        assert report.special_case == "chromatic"
        assert report.holds

    def test_holds_over_corpus(self, small_graphs):
        from homvariant.matroid_poly import verify_tutte_hom_identity

        for graph in small_graphs:
            for n, y in ((1, 0), (2, -1), (2, "1/3"), (3, 2)):
                assert verify_tutte_hom_identity(graph, n, y, with_oracles=False).holds

    @pytest.mark.acceptance
    def test_holds_with_oracles_up_to_six_edges(self, identity_corpus):
        from homvariant.matroid_poly import verify_tutte_hom_identity

        for graph in identity_corpus:
            for n in (2, 3, 4):
                for y in (0, -2, 3, 1 - n):
                    report = verify_tutte_hom_identity(graph, n, y)
                    assert report.hom_side == report.tutte_side, (graph, n, y)
                    if y in (0, 1 - n):
                        assert len(report.checks) >= 2, (graph, n, y)
                    assert report.holds, (graph, n, y)

    def test_y_equal_one_rejected(self):
        from homvariant.errors import DegenerateY
        from homvariant.matroid_poly import verify_tutte_hom_identity
        from homvariant.multigraph import Multigraph

        with pytest.raises(DegenerateY):
            verify_tutte_hom_identity(Multigraph.cycle(3), n=3, y=1)

    def test_report_dict(self):
        from homvariant.matroid_poly import verify_tutte_hom_identity
        from homvariant.multigraph import Multigraph

        report = verify_tutte_hom_identity(Multigraph.path(2), n=2, y="1/2")

        assert report.to_dict()["y"] == "1/2"
        assert report.to_dict()["special_case"] is None
