"""Constructions and reductions for l-covering hypergraphs."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from hypereuler.config.settings import Settings, settings as default_settings
from hypereuler.core.exceptions import (
    ConstructionFailedError,
    CoveringViolationError,
    FamilyRejectedError,
    IntersectionPreconditionError,
    PreconditionError,
)
from hypereuler.models.enums import BaseMethod, Strategy
from hypereuler.models.hypergraph import Edge, Hypergraph
from hypereuler.models.incidence import IncidenceGraph
from hypereuler.models.selection import FactorSelection
from hypereuler.models.trace import ReductionStep, ReductionTrace
from hypereuler.models.trail import ClosedTrail, EulerFamily
from hypereuler.services.factor_service import FactorService
from hypereuler.services.structure_service import StructureService
from hypereuler.services.trail_service import TrailService

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveOutcome:
    """Result of solving an l-covering hypergraph.

    ``trace`` and ``base_method`` are only set by the reduce strategy.
    """

    feasible: bool
    strategy: Strategy
    family: Optional[EulerFamily] = None
    selection: Optional[FactorSelection] = None
    trace: Optional[ReductionTrace] = None
    base_method: Optional[BaseMethod] = None


class CoveringService:
    """Euler families for l-covering k-hypergraphs."""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        structure: Optional[StructureService] = None,
        factor: Optional[FactorService] = None,
        trails: Optional[TrailService] = None,
    ):
        self.settings = settings or default_settings
        self.structure = structure or StructureService(self.settings)
        self.factor = factor or FactorService(self.settings)
        self.trails = trails or TrailService(self.settings)

    def tour_intersecting(self, hypergraph: Hypergraph) -> ClosedTrail:
        """Euler tour of a hypergraph whose edges pairwise share two vertices.

        A pair of edges sharing the most vertices (at least 3) is moved to the
        first and last positions; the remaining edges keep their order. Each
        anchor is the smallest eligible vertex.

        Raises:
            PreconditionError: If m < 2
            IntersectionPreconditionError: If some pair shares fewer than 2
                vertices or no pair shares 3
            ConstructionFailedError: If the built tour does not verify
        """
        edges = list(hypergraph.edges)
        if len(edges) < 2:
            raise PreconditionError(f"tour construction needs at least 2 edges, got {len(edges)}")

        best: Optional[tuple[int, int]] = None
        best_size = -1
        for i, j in combinations(range(len(edges)), 2):
            size = len(edges[i].members & edges[j].members)
            if size < 2:
                raise IntersectionPreconditionError(
                    f"edges {edges[i].id} and {edges[j].id} share {size} vertices",
                    pair=(edges[i].id, edges[j].id),
                )
            if size > best_size:
                best, best_size = (i, j), size
        assert best is not None
        if best_size < 3:
            raise IntersectionPreconditionError("no pair of edges shares 3 vertices")

        first, last = best
        ordered = (
            [edges[first]]
            + [edge for index, edge in enumerate(edges) if index not in best]
            + [edges[last]]
        )
        m = len(ordered)
        anchors = [0] * m
        anchors[1] = min(ordered[0].members & ordered[1].members)
        for i in range(2, m):
            anchors[i] = min((ordered[i - 1].members & ordered[i].members) - {anchors[i - 1]})
        anchors[0] = min((ordered[0].members & ordered[-1].members) - {anchors[1], anchors[m - 1]})

        trail = ClosedTrail(
            anchors=tuple(anchors) + (anchors[0],),
            edges=tuple(edge.id for edge in ordered),
        )
        self._check_construction("intersecting tour", hypergraph, trail)
        return trail

    def solve_small_cases(self, hypergraph: Hypergraph) -> Optional[ClosedTrail]:
        """Euler tour of a 2-covering k-hypergraph with n <= 2k - 3 or (k, n) = (4, 6).

        Returns:
            The tour, or None when neither case applies

        Raises:
            PreconditionError: If H is not uniform or has fewer than 2 edges
            CoveringViolationError: If H is not 2-covering
        """
        k = self._require_uniform(hypergraph)
        if hypergraph.size < 2:
            raise PreconditionError(f"small cases need at least 2 edges, got {hypergraph.size}")
        self._require_covering(hypergraph, 2)

        n = hypergraph.order
        if n <= 2 * k - 3:
            return self.tour_intersecting(hypergraph)
        if (k, n) != (4, 6):
            return None
        intersections = self.structure.pairwise_intersections(hypergraph)
        if max(intersections.values()) >= 3:
            return self.tour_intersecting(hypergraph)
        return self._design_tour(hypergraph)

    def _design_tour(self, hypergraph: Hypergraph) -> ClosedTrail:
        """Tour of the three 4-edges on 6 vertices that pairwise share exactly 2."""
        if hypergraph.size != 3:
            raise ConstructionFailedError(
                "(4,6) design tour",
                f"expected the three-edge design, got {hypergraph.size} edges",
            )
        e0, e1, e2 = hypergraph.edges
        a0 = min(e0.members & e2.members)
        a1 = max(e0.members & e1.members)
        a2 = min(e1.members & e2.members)
        trail = ClosedTrail(anchors=(a0, a1, a2, a0), edges=(e0.id, e1.id, e2.id))
        self._check_construction("(4,6) design tour", hypergraph, trail)
        return trail

    def reduce_once(
        self, hypergraph: Hypergraph, vertex: Optional[int] = None
    ) -> tuple[Hypergraph, ReductionStep]:
        """Delete one vertex and shrink every edge by exactly one vertex.

        Edges containing the vertex lose it; every other edge loses its
        largest vertex. Edge ids are kept. The vertex defaults to the smallest
        id.

        Raises:
            PreconditionError: If some edge has a single vertex or H has one vertex
        """
        if hypergraph.order < 2:
            raise PreconditionError("cannot delete the only vertex")
        v = hypergraph.vertices[0] if vertex is None else vertex
        if not hypergraph.has_vertex(v):
            raise PreconditionError(f"vertex {v} is not in the hypergraph", witness=v)

        removed: dict[int, int] = {}
        edges: list[Edge] = []
        for edge in hypergraph.edges:
            if len(edge) < 2:
                raise PreconditionError(f"edge {edge.id} has cardinality 1", witness=edge.id)
            dropped = v if v in edge else max(edge.members)
            removed[edge.id] = dropped
            edges.append(Edge(id=edge.id, members=edge.members - {dropped}))

        labels = None
        if hypergraph.labels is not None:
            labels = {u: name for u, name in hypergraph.labels.items() if u != v}
        reduced = Hypergraph(
            vertices=tuple(u for u in hypergraph.vertices if u != v),
            edges=tuple(edges),
            labels=labels,
        )
        step = ReductionStep(
            deleted_vertex=v,
            removed=removed,
            edge_map={edge.id: edge.id for edge in edges},
        )
        logger.debug("deleted vertex %d: %d edges shrunk", v, len(edges))
        return reduced, step

    def reduce_to(
        self, hypergraph: Hypergraph, l: int, target_l: int = 2
    ) -> tuple[list[Hypergraph], ReductionTrace]:
        """Reduce an l-covering hypergraph to a target_l-covering one.

        Returns:
            The chain H = H_0, ..., H_s (s = l - target_l) and its trace
        """
        if target_l < 2 or target_l > l:
            raise PreconditionError(f"cannot reduce from l={l} to l={target_l}")
        chain = [hypergraph]
        trace = ReductionTrace()
        for _ in range(l - target_l):
            reduced, step = self.reduce_once(chain[-1])
            chain.append(reduced)
            trace = trace.then(step)
        return chain, trace

    def lift_family(
        self, reduced: Hypergraph, family: EulerFamily, step: ReductionStep
    ) -> EulerFamily:
        """Map every edge id of a reduced family back through the step.

        Anchors are kept; they stay inside the enlarged edges.

        Raises:
            FamilyRejectedError: If the family does not verify on the reduced hypergraph
        """
        self.trails.ensure_verified(reduced, family)
        inverse = step.inverse_map()
        return EulerFamily.of(
            ClosedTrail(
                anchors=trail.anchors,
                edges=tuple(inverse[edge_id] for edge_id in trail.edges),
            )
            for trail in family.trails
        )

    def lift_through(
        self, family: EulerFamily, trace: ReductionTrace, chain: list[Hypergraph]
    ) -> EulerFamily:
        """Lift a family of the last hypergraph in the chain back to the first."""
        if len(chain) != len(trace) + 1:
            raise PreconditionError(
                f"chain of {len(chain)} hypergraphs does not match {len(trace)} steps"
            )
        for index in range(len(trace) - 1, -1, -1):
            family = self.lift_family(chain[index + 1], family, trace.steps[index])
        self.trails.ensure_verified(chain[0], family)
        return family

    def solve_l_covering(
        self, hypergraph: Hypergraph, l: int, strategy: Strategy = Strategy.DIRECT
    ) -> SolveOutcome:
        """Euler family of an l-covering k-hypergraph, 2 <= l < k.

        With at least two edges a family always exists; a single edge admits
        no closed trail and is reported infeasible.

        Raises:
            PreconditionError: If H is not uniform or l is out of range
            CoveringViolationError: If H is not l-covering
            FamilyRejectedError: If a produced family fails verification
        """
        k = self._require_uniform(hypergraph)
        if not 2 <= l < k:
            raise PreconditionError(f"need 2 <= l < k, got l={l}, k={k}")
        self._require_covering(hypergraph, l)

        if hypergraph.size <= 1:
            return SolveOutcome(feasible=False, strategy=strategy)
        if strategy is Strategy.DIRECT:
            return self._solve_direct(hypergraph)
        return self._solve_reduce(hypergraph, l)

    def _solve_direct(self, hypergraph: Hypergraph) -> SolveOutcome:
        selection = self.factor.solve_even_two_factor(hypergraph)
        if selection is None:
            logger.warning("no even two-factor for a covering hypergraph (n=%d)", hypergraph.order)
            return SolveOutcome(feasible=False, strategy=Strategy.DIRECT)
        family = self.trails.extract_family(IncidenceGraph.from_hypergraph(hypergraph), selection)
        self.trails.ensure_verified(hypergraph, family)
        return SolveOutcome(
            feasible=True,
            strategy=Strategy.DIRECT,
            family=family,
            selection=selection,
            base_method=BaseMethod.FACTOR,
        )

    def _solve_reduce(self, hypergraph: Hypergraph, l: int) -> SolveOutcome:
        chain, trace = self.reduce_to(hypergraph, l)
        base = chain[-1]

        tour = self.solve_small_cases(base)
        if tour is not None:
            base_family = EulerFamily.of([tour])
            method = BaseMethod.SMALL_CASE
        else:
            base_outcome = self._solve_direct(base)
            if not base_outcome.feasible or base_outcome.family is None:
                return SolveOutcome(feasible=False, strategy=Strategy.REDUCE, trace=trace)
            base_family = base_outcome.family
            method = BaseMethod.FACTOR

        try:
            family = self.lift_through(base_family, trace, chain)
        except FamilyRejectedError:
            logger.error("lifted family failed verification after %d steps", len(trace))
            raise
        return SolveOutcome(
            feasible=True,
            strategy=Strategy.REDUCE,
            family=family,
            selection=self.trails.selection_from_family(hypergraph, family),
            trace=trace,
            base_method=method,
        )

    def _require_uniform(self, hypergraph: Hypergraph) -> int:
        k = hypergraph.uniformity()
        if k is None:
            raise PreconditionError("hypergraph is not uniform")
        return k

    def _require_covering(self, hypergraph: Hypergraph, l: int) -> None:
        witness = self.structure.uncovered_subset(hypergraph, l)
        if witness is not None:
            raise CoveringViolationError(l, witness)

    def _check_construction(self, name: str, hypergraph: Hypergraph, trail: ClosedTrail) -> None:
        verdict = self.trails.verify_family(hypergraph, EulerFamily.of([trail]))
        if not verdict.accepted:
            logger.error("%s rejected: %s", name, verdict.detail)
            raise ConstructionFailedError(name, verdict.detail or "")
