"""Euler families: extraction from selections, verification, exact tours."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from hypereuler.config.settings import Settings, settings as default_settings
from hypereuler.core.exceptions import (
    FamilyRejectedError,
    PreconditionError,
    SelectionInvariantError,
)
from hypereuler.core.hierholzer import closed_trails
from hypereuler.core.unionfind import partition
from hypereuler.models.enums import RejectReason, TourStatus
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.models.incidence import IncidenceGraph
from hypereuler.models.selection import FactorSelection
from hypereuler.models.trail import ClosedTrail, EulerFamily, FamilyVerdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TourOutcome:
    """Result of the exact tour search."""

    status: TourStatus
    explored: int
    budget: int
    trail: Optional[ClosedTrail] = None


class _BudgetExhausted(Exception):
    pass


class TrailService:
    """Closed-trail certificates for hypergraphs."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or default_settings

    def extract_family(self, incidence: IncidenceGraph, selection: FactorSelection) -> EulerFamily:
        """Decompose the subgraph G' picked by a selection into closed trails.

        G' has the two chosen incidences of every edge; each non-trivial
        component yields one trail, so trails are anchor- and edge-disjoint.

        Raises:
            SelectionInvariantError: If the selection is not valid for the hypergraph
        """
        hypergraph = incidence.hypergraph
        problems = selection.violations(hypergraph)
        if problems:
            raise SelectionInvariantError("; ".join(problems))
        links = [(edge_id, u, v) for edge_id, (u, v) in selection.choice.items()]
        trails = [
            ClosedTrail(anchors=tuple(anchors), edges=tuple(edge_ids))
            for anchors, edge_ids in closed_trails(links)
        ]
        logger.debug("extracted %d trails from %d edges", len(trails), len(links))
        return EulerFamily.of(trails)

    def verify_family(self, hypergraph: Hypergraph, family: EulerFamily) -> FamilyVerdict:
        """Check a family against every trail and family clause.

        Clauses are checked trail by trail in order; the verdict names the
        first one violated. Rejection is a value, never an exception.
        """
        known_edges = set(hypergraph.edge_ids)
        used_edges: set[int] = set()
        used_anchors: set[int] = set()

        for index, trail in enumerate(family.trails):
            where = f"trail {index}"
            t = len(trail.edges)
            if len(trail.anchors) != t + 1:
                return FamilyVerdict.reject(
                    RejectReason.LENGTH_MISMATCH,
                    f"{where}: {len(trail.anchors)} anchors for {t} edges",
                )
            if t < 2:
                return FamilyVerdict.reject(RejectReason.TOO_SHORT, f"{where}: {t} edges")
            if trail.anchors[0] != trail.anchors[-1]:
                return FamilyVerdict.reject(
                    RejectReason.NOT_CLOSED,
                    f"{where}: starts at {trail.anchors[0]}, ends at {trail.anchors[-1]}",
                )
            for before, edge_id, after in trail.steps():
                if edge_id not in known_edges:
                    return FamilyVerdict.reject(RejectReason.UNKNOWN_EDGE, f"{where}: edge {edge_id}")
                for anchor in (before, after):
                    if not hypergraph.has_vertex(anchor):
                        return FamilyVerdict.reject(
                            RejectReason.UNKNOWN_VERTEX, f"{where}: vertex {anchor}"
                        )
                if before == after:
                    return FamilyVerdict.reject(
                        RejectReason.REPEATED_ANCHOR_STEP,
                        f"{where}: {before} on both sides of edge {edge_id}",
                    )
                edge = hypergraph.edge(edge_id)
                for anchor in (before, after):
                    if anchor not in edge:
                        return FamilyVerdict.reject(
                            RejectReason.NOT_INCIDENT,
                            f"{where}: vertex {anchor} not in edge {edge_id}",
                        )
                if edge_id in used_edges:
                    return FamilyVerdict.reject(
                        RejectReason.REPEATED_EDGE, f"{where}: edge {edge_id} traversed twice"
                    )
                used_edges.add(edge_id)
            shared = sorted(trail.anchor_set & used_anchors)
            if shared:
                return FamilyVerdict.reject(
                    RejectReason.SHARED_ANCHOR, f"{where}: anchors {shared} used by an earlier trail"
                )
            used_anchors |= trail.anchor_set

        missing = sorted(known_edges - used_edges)
        if missing:
            return FamilyVerdict.reject(RejectReason.NOT_COVERED, f"edges {missing} not traversed")
        return FamilyVerdict.accept()

    def ensure_verified(self, hypergraph: Hypergraph, family: EulerFamily) -> None:
        """Raise FamilyRejectedError unless the family verifies."""
        verdict = self.verify_family(hypergraph, family)
        if not verdict.accepted:
            assert verdict.reason is not None
            raise FamilyRejectedError(verdict.reason.value, verdict.detail)

    def selection_from_family(self, hypergraph: Hypergraph, family: EulerFamily) -> FactorSelection:
        """Consecutive anchor pairs of a verified family.

        Raises:
            FamilyRejectedError: If the family does not verify
        """
        self.ensure_verified(hypergraph, family)
        return FactorSelection(
            choice={
                edge_id: (before, after)
                for trail in family.trails
                for before, edge_id, after in trail.steps()
            }
        )

    def is_tour_selection(self, hypergraph: Hypergraph, selection: FactorSelection) -> bool:
        """Valid selection whose G' has at most one non-trivial component."""
        if not selection.is_valid_for(hypergraph):
            return False
        touched = sorted({v for pair in selection.choice.values() for v in pair})
        return len(partition(touched, selection.choice.values())) <= 1

    def euler_tour_exact(self, hypergraph: Hypergraph, budget: Optional[int] = None) -> TourOutcome:
        """Backtracking search for a selection with a connected G'.

        Each search node is one per-edge pair choice. The budget caps search
        nodes so that "none" is only reported after a complete search.

        Raises:
            PreconditionError: If m < 2 or some edge has fewer than 2 vertices
        """
        limit = budget if budget is not None else self.settings.tour_budget
        if hypergraph.size < 2:
            raise PreconditionError(f"tour search needs at least 2 edges, got {hypergraph.size}")
        if any(len(edge) < 2 for edge in hypergraph.edges):
            raise PreconditionError("every edge needs at least 2 vertices")

        touched = sorted({v for edge in hypergraph.edges for v in edge.members})
        if len(partition(touched, (edge.members for edge in hypergraph.edges))) > 1:
            logger.debug("edges span several components; no tour")
            return TourOutcome(status=TourStatus.NONE, explored=0, budget=limit)

        edges = hypergraph.edges
        options = [list(combinations(edge.sorted, 2)) for edge in edges]
        picks: list[tuple[int, int]] = []
        explored = 0

        def connected() -> bool:
            vertices = sorted({v for pair in picks for v in pair})
            return len(partition(vertices, picks)) == 1

        def search(index: int, parity: int) -> bool:
            nonlocal explored
            if index == len(edges):
                return parity == 0 and connected()
            if bin(parity).count("1") > 2 * (len(edges) - index):
                return False
            for u, v in options[index]:
                explored += 1
                if explored > limit:
                    raise _BudgetExhausted
                picks.append((u, v))
                if search(index + 1, parity ^ (1 << u) ^ (1 << v)):
                    return True
                picks.pop()
            return False

        try:
            found = search(0, 0)
        except _BudgetExhausted:
            logger.debug("tour search budget %d exhausted", limit)
            return TourOutcome(status=TourStatus.BUDGET_EXCEEDED, explored=limit, budget=limit)

        if not found:
            return TourOutcome(status=TourStatus.NONE, explored=explored, budget=limit)
        selection = FactorSelection(choice={edge.id: pair for edge, pair in zip(edges, picks)})
        family = self.extract_family(IncidenceGraph.from_hypergraph(hypergraph), selection)
        return TourOutcome(
            status=TourStatus.FOUND,
            explored=explored,
            budget=limit,
            trail=family.trails[0],
        )
