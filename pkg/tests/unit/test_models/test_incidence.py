"""Unit tests for incidence graphs and their looped variant."""

import pytest

from hypereuler.core.exceptions import PreconditionError, UnknownIdError
from hypereuler.models.enums import NodeKind
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.models.incidence import IncidenceGraph
from hypereuler.models.looped import LoopedIncidenceGraph


class TestIncidenceGraph:
    """Test the bipartite incidence graph."""

    def test_complete_triple_system(self, k4_3):
        """Test K4^3 has 8 nodes and 12 incidences."""
        incidence = IncidenceGraph.from_hypergraph(k4_3)
        assert incidence.node_count == 8
        assert incidence.graph.number_of_edges() == 12
        assert len(incidence.incidences()) == 12

    def test_node_layout(self, two_triples):
        """Test v-nodes come first, then e-nodes in edge order."""
        incidence = IncidenceGraph.from_hypergraph(two_triples)
        assert incidence.v_nodes == [0, 1, 2, 3]
        assert incidence.e_nodes == [4, 5]
        assert incidence.kind(4) is NodeKind.EDGE
        assert incidence.ref(5) == 1
        assert incidence.node_label(2) == "v2"
        assert incidence.node_label(5) == "e1"

    def test_duplicate_edges_get_distinct_nodes(self):
        """Test two copies of one edge become two e-nodes."""
        incidence = IncidenceGraph.from_hypergraph(Hypergraph.from_edges(2, [[0, 1], [0, 1]]))
        assert incidence.e_node(0) != incidence.e_node(1)
        assert incidence.degree(incidence.v_node(0)) == 2

    def test_frozen(self, k4_3):
        """Test the underlying graph cannot be mutated."""
        incidence = IncidenceGraph.from_hypergraph(k4_3)
        with pytest.raises(Exception):
            incidence.graph.add_node(99)

    def test_unknown_ids(self, k4_3):
        """Test lookups of missing vertices and edges."""
        incidence = IncidenceGraph.from_hypergraph(k4_3)
        with pytest.raises(UnknownIdError):
            incidence.v_node(10)
        with pytest.raises(UnknownIdError):
            incidence.e_node(10)


class TestLoopedIncidenceGraph:
    """Test symbolic loops and the factor profile."""

    def test_default_r(self, k4_3):
        """Test r defaults to 2(m + n)^2."""
        looped = LoopedIncidenceGraph.with_default_loops(IncidenceGraph.from_hypergraph(k4_3))
        assert looped.r == 128

    def test_degrees_and_profile(self, k4_3):
        """Test loops add 2r at v-nodes and nothing at e-nodes."""
        incidence = IncidenceGraph.from_hypergraph(k4_3)
        looped = LoopedIncidenceGraph(base=incidence, r=4)
        assert looped.degree(0) == 3 + 8
        assert looped.degree(4) == 3
        assert looped.f(0) == 4
        assert looped.f(4) == 2

    def test_negative_r(self, k4_3):
        """Test negative loop counts are rejected."""
        with pytest.raises(PreconditionError):
            LoopedIncidenceGraph(base=IncidenceGraph.from_hypergraph(k4_3), r=-2)
