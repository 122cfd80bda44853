"""Unit tests for maximum-cardinality matching."""

import networkx as nx
from hypothesis import given, settings

from hypereuler.core.matching import is_perfect, max_matching, to_graph
from tests.strategies import simple_graphs


def to_adjacency(graph: nx.Graph) -> list[list[int]]:
    return [sorted(graph.neighbors(v)) for v in range(graph.number_of_nodes())]


def assert_valid(adjacency: list[list[int]], matching: list[tuple[int, int]]) -> None:
    seen: set[int] = set()
    for u, v in matching:
        assert u < v
        assert v in adjacency[u]
        assert u not in seen and v not in seen
        seen.update((u, v))


class TestMaxMatching:
    """Test maximum-cardinality matching on known graphs."""

    def test_triangle(self):
        """Test a triangle has a matching of size 1."""
        matching = max_matching(to_adjacency(nx.cycle_graph(3)))
        assert len(matching) == 1

    def test_even_cycle(self):
        """Test C6 has a perfect matching."""
        adjacency = to_adjacency(nx.cycle_graph(6))
        matching = max_matching(adjacency)
        assert len(matching) == 3
        assert is_perfect(matching, 6)
        assert_valid(adjacency, matching)

    def test_petersen(self):
        """Test the Petersen graph has a perfect matching."""
        adjacency = to_adjacency(nx.petersen_graph())
        matching = max_matching(adjacency)
        assert len(matching) == 5
        assert_valid(adjacency, matching)

    def test_empty_graph(self):
        """Test graphs without edges have empty matchings."""
        assert max_matching([]) == []
        assert max_matching([[], []]) == []

    def test_blossom_needed(self):
        """Test a pentagon with a pendant path needs blossom contraction."""
        graph = nx.cycle_graph(5)
        graph.add_edges_from([(0, 5), (5, 6)])
        assert len(max_matching(to_adjacency(graph))) == 3

    def test_deterministic(self):
        """Test repeated runs give the same matching."""
        adjacency = to_adjacency(nx.petersen_graph())
        assert max_matching(adjacency) == max_matching(adjacency)

    def test_star_is_not_perfect(self):
        """Test a star leaves two leaves exposed."""
        matching = max_matching(to_adjacency(nx.star_graph(3)))
        assert len(matching) == 1
        assert not is_perfect(matching, 4)

    def test_to_graph_keeps_isolated_nodes(self):
        """Test every node id is present, edges once each."""
        graph = to_graph([[1], [0], []])
        assert list(graph.nodes) == [0, 1, 2]
        assert list(graph.edges) == [(0, 1)]

    @given(simple_graphs())
    @settings(max_examples=200, deadline=None)
    def test_valid_and_maximal(self, adjacency):
        """Test the result is a matching no edge could extend."""
        matching = max_matching(adjacency)
        assert_valid(adjacency, matching)
        matched = {v for pair in matching for v in pair}
        for u, row in enumerate(adjacency):
            if u not in matched:
                assert all(v in matched for v in row)
        assert matching == max_matching(adjacency)
