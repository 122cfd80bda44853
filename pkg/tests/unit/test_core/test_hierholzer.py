"""Unit tests for closed-trail decomposition."""

import pytest

from hypereuler.core.hierholzer import closed_trails


class TestClosedTrails:
    """Test Hierholzer decomposition of even multigraphs."""

    def test_triangle(self):
        """Test a triangle becomes one trail from its smallest vertex."""
        trails = closed_trails([(0, 0, 1), (1, 1, 2), (2, 0, 2)])
        assert trails == [([0, 1, 2, 0], [0, 1, 2])]

    def test_parallel_links(self):
        """Test two parallel links form a trail of length 2."""
        assert closed_trails([(0, 0, 1), (1, 0, 1)]) == [([0, 1, 0], [0, 1])]

    def test_one_trail_per_component(self):
        """Test disjoint cycles give separate trails."""
        trails = closed_trails([(0, 0, 1), (1, 0, 1), (2, 2, 3), (3, 2, 3)])
        assert [anchors for anchors, _ in trails] == [[0, 1, 0], [2, 3, 2]]

    def test_figure_eight_uses_every_link(self):
        """Test two cycles through one vertex merge into a single trail."""
        links = [(0, 0, 1), (1, 1, 2), (2, 0, 2), (3, 0, 3), (4, 3, 4), (5, 0, 4)]
        trails = closed_trails(links)
        assert len(trails) == 1
        anchors, link_ids = trails[0]
        assert sorted(link_ids) == [0, 1, 2, 3, 4, 5]
        assert anchors[0] == anchors[-1] == 0

    def test_empty(self):
        """Test no links give no trails."""
        assert closed_trails([]) == []

    def test_odd_degree_rejected(self):
        """Test odd degrees raise."""
        with pytest.raises(ValueError, match="odd degree"):
            closed_trails([(0, 0, 1), (1, 1, 2)])

    def test_loop_rejected(self):
        """Test loops raise."""
        with pytest.raises(ValueError, match="loop"):
            closed_trails([(0, 1, 1)])
