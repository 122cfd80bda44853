"""Unit tests for trails, families, selections and traces."""

from hypereuler.models.enums import RejectReason
from hypereuler.models.selection import FactorSelection
from hypereuler.models.trace import ReductionStep, ReductionTrace
from hypereuler.models.trail import ClosedTrail, EulerFamily, FamilyVerdict


class TestClosedTrail:
    """Test trail accessors and normalization."""

    def test_steps(self):
        """Test steps pair each edge with its anchors."""
        trail = ClosedTrail(anchors=(0, 1, 0), edges=(0, 1))
        assert trail.length == 2
        assert trail.steps() == [(0, 0, 1), (1, 1, 0)]

    def test_normalized_rotation(self):
        """Test normalization picks the smallest rotation."""
        trail = ClosedTrail(anchors=(2, 0, 1, 2), edges=(5, 3, 4))
        assert trail.normalized() == ClosedTrail(anchors=(0, 1, 2, 0), edges=(3, 4, 5))

    def test_normalized_reversal(self):
        """Test normalization considers the reversed direction."""
        trail = ClosedTrail(anchors=(0, 2, 1, 0), edges=(5, 4, 3))
        assert trail.normalized() == ClosedTrail(anchors=(0, 1, 2, 0), edges=(3, 4, 5))

    def test_malformed_trail_left_alone(self):
        """Test open or mismatched trails normalize to themselves."""
        trail = ClosedTrail(anchors=(0, 1), edges=(0,))
        assert trail.normalized() is trail


class TestEulerFamily:
    """Test family helpers."""

    def test_normalized_orders_trails(self):
        """Test trails are sorted after normalization."""
        family = EulerFamily.of(
            [
                ClosedTrail(anchors=(3, 2, 3), edges=(1, 0)),
                ClosedTrail(anchors=(1, 0, 1), edges=(2, 3)),
            ]
        )
        normalized = family.normalized()
        assert [trail.anchors for trail in normalized.trails] == [(0, 1, 0), (2, 3, 2)]
        assert sorted(family.edge_ids()) == [0, 1, 2, 3]
        assert len(family) == 2

    def test_normalized_compares_interleaved_sequences(self):
        """Test trail order follows a0 e1 a1 ..., not anchors first."""
        short = ClosedTrail(anchors=(0, 1, 0), edges=(5, 6))
        long = ClosedTrail(anchors=(0, 1, 2, 0), edges=(1, 2, 3))
        assert long.interleaved() == (0, 1, 1, 2, 2, 3)
        assert EulerFamily.of([short, long]).normalized().trails == (long, short)

    def test_verdicts(self):
        """Test accept and reject constructors."""
        assert FamilyVerdict.accept().accepted
        verdict = FamilyVerdict.reject(RejectReason.NOT_COVERED, "edges [2]")
        assert not verdict.accepted
        assert verdict.reason is RejectReason.NOT_COVERED


class TestFactorSelection:
    """Test selection normalization and invariants."""

    def test_pairs_sorted(self):
        """Test chosen pairs are stored ascending."""
        assert FactorSelection({0: (2, 1)}).choice[0] == (1, 2)

    def test_valid(self, two_triples):
        """Test both edges choosing {0, 1} is valid."""
        selection = FactorSelection({0: (0, 1), 1: (1, 0)})
        assert selection.is_valid_for(two_triples)
        assert selection.multiplicities() == {0: 2, 1: 2}

    def test_violations(self, two_triples):
        """Test every broken invariant is reported."""
        problems = FactorSelection({0: (0, 1), 7: (0, 1)}).violations(two_triples)
        assert "edges without a choice: [1]" in problems
        assert "choices for unknown edges: [7]" in problems

    def test_pair_outside_edge(self, two_triples):
        """Test chosen vertices must lie in the edge."""
        problems = FactorSelection({0: (0, 3), 1: (0, 3)}).violations(two_triples)
        assert problems == ["edge 0: chosen pair (0, 3) not inside edge"]

    def test_odd_multiplicity(self, two_triples):
        """Test odd vertex multiplicities are reported."""
        problems = FactorSelection({0: (0, 1), 1: (0, 3)}).violations(two_triples)
        assert problems == ["odd multiplicity at vertices [1, 3]"]

    def test_equality(self):
        """Test selections compare by choice."""
        assert FactorSelection({1: (0, 2), 0: (1, 0)}) == FactorSelection({0: (0, 1), 1: (2, 0)})


class TestReductionTrace:
    """Test reduction steps."""

    def test_inverse_map(self):
        """Test identity edge maps invert to themselves."""
        step = ReductionStep(deleted_vertex=0, removed={0: 0, 1: 4}, edge_map={0: 0, 1: 1})
        assert step.inverse_map() == {0: 0, 1: 1}
        assert step.is_bijective()

    def test_then_appends(self):
        """Test steps are appended in order."""
        first = ReductionStep(deleted_vertex=0, removed={}, edge_map={})
        second = ReductionStep(deleted_vertex=1, removed={}, edge_map={})
        trace = ReductionTrace().then(first).then(second)
        assert len(trace) == 2
        assert trace.steps[1].deleted_vertex == 1
