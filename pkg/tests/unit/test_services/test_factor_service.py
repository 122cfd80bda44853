"""Unit tests for FactorService."""

from itertools import combinations, combinations_with_replacement

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings

from hypereuler.core.exceptions import GuardExceededError, PreconditionError
from hypereuler.core.matching import is_perfect
from hypereuler.models.enums import GadgetNodeKind
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.models.incidence import IncidenceGraph
from hypereuler.services.factor_service import FactorService
from tests.strategies import hypergraphs


class TestGadget:
    """Test gadget construction."""

    def test_single_triple(self, factor_service, single_triple):
        """Test one triple gives 4 e-side and 6 v-side nodes."""
        gadget = factor_service.build_gadget(IncidenceGraph.from_hypergraph(single_triple))
        assert gadget.node_count == 10
        kinds = [node.kind for node in gadget.nodes]
        assert kinds.count(GadgetNodeKind.E_EXTERNAL) == 3
        assert kinds.count(GadgetNodeKind.E_CORE) == 1
        assert kinds.count(GadgetNodeKind.V_EXTERNAL) == 3
        assert kinds.count(GadgetNodeKind.V_AUX) == 3
        assert len(gadget.incidence_edges) == 3

    @pytest.mark.parametrize(
        "edges, n, expected",
        [
            ([[0, 1, 2]], 3, 10),
            ([[0, 1, 2], [0, 1, 3]], 4, 16),
            ([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]], 4, 32),
            ([[0, 1, 2, 3], [0, 1, 4, 5], [2, 3, 4, 5]], 6, 30),
        ],
    )
    def test_node_count_formula(self, factor_service, edges, n, expected):
        """Test the gadget size matches the closed formula."""
        hypergraph = Hypergraph.from_edges(n, edges)
        gadget = factor_service.build_gadget(IncidenceGraph.from_hypergraph(hypergraph))
        assert gadget.node_count == expected
        assert factor_service.expected_node_count(hypergraph) == expected

    def test_edges_are_simple(self, factor_service, k4_3):
        """Test the gadget has no loops or repeated edges."""
        gadget = factor_service.build_gadget(IncidenceGraph.from_hypergraph(k4_3))
        assert all(u < v for u, v in gadget.edges)
        assert len(set(gadget.edges)) == len(gadget.edges)

    def test_singleton_edge_rejected(self, factor_service):
        """Test edges of size 1 cannot be part of a factor."""
        hypergraph = Hypergraph.from_edges(2, [[0], [0, 1]])
        with pytest.raises(PreconditionError):
            factor_service.build_gadget(IncidenceGraph.from_hypergraph(hypergraph))


class TestSolveEvenTwoFactor:
    """Test the matching-based solver."""

    def test_complete_triple_system(self, factor_service, k4_3):
        """Test K4^3 has a valid selection."""
        selection = factor_service.solve_even_two_factor(k4_3)
        assert selection is not None
        assert selection.is_valid_for(k4_3)

    def test_two_triples(self, factor_service, two_triples):
        """Test two triples sharing a pair both pick that pair."""
        selection = factor_service.solve_even_two_factor(two_triples)
        assert selection is not None
        assert dict(selection.choice) == {0: (0, 1), 1: (0, 1)}

    def test_triple_edge(self, factor_service):
        """Test three copies of one triple pick its three pairs."""
        hypergraph = Hypergraph.from_edges(3, [[0, 1, 2]] * 3)
        selection = factor_service.solve_even_two_factor(hypergraph)
        assert selection is not None
        assert sorted(selection.choice.values()) == [(0, 1), (0, 2), (1, 2)]

    def test_single_edge_infeasible(self, factor_service, single_triple):
        """Test one edge admits no selection."""
        assert factor_service.solve_even_two_factor(single_triple) is None

    def test_disjoint_triples_infeasible(self, factor_service):
        """Test two disjoint triples admit no selection."""
        hypergraph = Hypergraph.from_edges(6, [[0, 1, 2], [3, 4, 5]])
        assert factor_service.solve_even_two_factor(hypergraph) is None
        assert factor_service.brute_force_selection(hypergraph) is None

    def test_no_edges(self, factor_service):
        """Test the empty selection is valid with no edges."""
        selection = factor_service.solve_even_two_factor(Hypergraph.from_edges(2, []))
        assert selection is not None
        assert dict(selection.choice) == {}

    def test_max_matching_is_perfect_when_feasible(self, factor_service, k4_3):
        """Test the full matching of a feasible gadget is perfect."""
        gadget = factor_service.build_gadget(IncidenceGraph.from_hypergraph(k4_3))
        matching = factor_service.max_matching(gadget)
        assert is_perfect(matching, gadget.node_count)
        assert factor_service.selection_from_matching(gadget, matching).is_valid_for(k4_3)

    @given(hypergraphs(max_vertices=6, max_edges=5))
    @hypothesis_settings(max_examples=500, deadline=None)
    def test_agrees_with_brute_force(self, hypergraph):
        """Test feasibility equals the exhaustive oracle's."""
        service = FactorService()
        selection = service.solve_even_two_factor(hypergraph)
        oracle = service.brute_force_selection(hypergraph)
        assert (selection is None) == (oracle is None)
        if selection is not None:
            assert selection.is_valid_for(hypergraph)
            assert oracle.is_valid_for(hypergraph)

    def test_agrees_on_every_small_shape(self):
        """Test every multiset of at most 4 edges of size 2 to 4 on 4 vertices."""
        service = FactorService()
        shapes = [edge for size in range(2, 5) for edge in combinations(range(4), size)]
        checked = 0
        for m in range(1, 5):
            for edges in combinations_with_replacement(shapes, m):
                hypergraph = Hypergraph.from_edges(4, edges)
                matched = service.solve_even_two_factor(hypergraph) is not None
                assert matched == (service.brute_force_selection(hypergraph) is not None), edges
                checked += 1
        assert checked == 1364

    def test_agrees_on_seeded_instances(self):
        """Test 500 PCG64-seeded hypergraphs with up to 4 edges."""
        service = FactorService()
        rng = np.random.Generator(np.random.PCG64(20240))
        for _ in range(500):
            n = int(rng.integers(2, 8))
            edges = [
                rng.choice(n, size=int(rng.integers(2, min(4, n) + 1)), replace=False).tolist()
                for _ in range(int(rng.integers(1, 5)))
            ]
            hypergraph = Hypergraph.from_edges(n, edges)
            matched = service.solve_even_two_factor(hypergraph) is not None
            assert matched == (service.brute_force_selection(hypergraph) is not None), edges


class TestBruteForce:
    """Test the exhaustive oracle."""

    def test_first_selection_in_product_order(self, factor_service, two_triples):
        """Test the oracle returns the first valid choice."""
        assert dict(factor_service.brute_force_selection(two_triples).choice) == {
            0: (0, 1),
            1: (0, 1),
        }

    def test_guard(self, settings, k4_3):
        """Test the search space is guarded."""
        service = FactorService(settings.model_copy(update={"brute_force_guard": 10}))
        with pytest.raises(GuardExceededError):
            service.brute_force_selection(k4_3)
