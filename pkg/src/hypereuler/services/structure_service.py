"""Structural predicates: uniformity, covering, connectivity, cut edges."""

import logging
from itertools import combinations
from typing import Optional

import networkx as nx

from hypereuler.config.settings import Settings, settings as default_settings
from hypereuler.core.exceptions import PreconditionError, UnknownIdError
from hypereuler.core.guards import ensure_within
from hypereuler.core.unionfind import partition
from hypereuler.models.enums import NodeKind
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.models.incidence import IncidenceGraph
from hypereuler.schemas.report import ComponentsReport, CoveringVerdict, StructureReport

logger = logging.getLogger(__name__)


class StructureService:
    """Structural queries on hypergraphs."""

    def __init__(self, settings: Optional[Settings] = None):
        """Initialize structure service.

        Args:
            settings: Guard configuration; the global settings by default
        """
        self.settings = settings or default_settings

    def is_k_uniform(self, hypergraph: Hypergraph, k: int) -> bool:
        """True iff every edge has cardinality k."""
        return all(len(edge) == k for edge in hypergraph.edges)

    def uncovered_subset(self, hypergraph: Hypergraph, l: int) -> Optional[tuple[int, ...]]:
        """First l-subset (lexicographic) contained in no edge.

        Args:
            hypergraph: Hypergraph to check
            l: Subset size, 2 <= l <= n

        Returns:
            The uncovered subset, or None when H is l-covering

        Raises:
            PreconditionError: If l < 2 or l > n
            GuardExceededError: If n or l exceed the exhaustive-check guard
        """
        if l < 2:
            raise PreconditionError(f"covering parameter l={l} must be at least 2")
        if l > hypergraph.order:
            raise PreconditionError(
                f"covering parameter l={l} exceeds the order n={hypergraph.order}"
            )
        ensure_within("covering order", hypergraph.order, self.settings.cover_guard_max_n)
        ensure_within("covering l", l, self.settings.cover_guard_max_l)

        covered: set[tuple[int, ...]] = set()
        for members in {edge.members for edge in hypergraph.edges}:
            if len(members) >= l:
                covered.update(combinations(sorted(members), l))
        for subset in combinations(hypergraph.vertices, l):
            if subset not in covered:
                return subset
        return None

    def is_l_covering(self, hypergraph: Hypergraph, l: int) -> bool:
        """True iff every l-subset of vertices lies in some edge."""
        return self.uncovered_subset(hypergraph, l) is None

    def components(self, hypergraph: Hypergraph) -> ComponentsReport:
        """Partition vertices by walk-connectivity; isolated vertices count."""
        classes = partition(hypergraph.vertices, (edge.members for edge in hypergraph.edges))
        return ComponentsReport(count=len(classes), classes=classes)

    def component_count(self, hypergraph: Hypergraph) -> int:
        return self.components(hypergraph).count

    def is_cut_edge(self, hypergraph: Hypergraph, edge_id: int) -> bool:
        """c(H \\ e) > c(H)."""
        reduced = hypergraph.without_edge(edge_id)
        return self.component_count(reduced) > self.component_count(hypergraph)

    def is_cut_vertex(self, hypergraph: Hypergraph, vertex: int) -> bool:
        """c(H - v) > c(H), where H - v drops v from every edge."""
        if not hypergraph.has_vertex(vertex):
            raise UnknownIdError("Vertex", vertex)
        if hypergraph.order == 1:
            return False
        reduced = hypergraph.without_vertex(vertex)
        return self.component_count(reduced) > self.component_count(hypergraph)

    def cut_edges(self, hypergraph: Hypergraph) -> list[int]:
        """Edges whose e-node is an articulation point of the incidence graph."""
        incidence = self.incidence_graph(hypergraph)
        return sorted(
            incidence.ref(node)
            for node in nx.articulation_points(incidence.graph)
            if incidence.kind(node) is NodeKind.EDGE
        )

    def cut_vertices(self, hypergraph: Hypergraph) -> list[int]:
        return [v for v in hypergraph.vertices if self.is_cut_vertex(hypergraph, v)]

    def incidence_graph(self, hypergraph: Hypergraph) -> IncidenceGraph:
        return IncidenceGraph.from_hypergraph(hypergraph)

    def min_degree(self, hypergraph: Hypergraph) -> int:
        return min(hypergraph.degrees().values())

    def pairwise_intersections(self, hypergraph: Hypergraph) -> dict[tuple[int, int], int]:
        """|e & f| for every pair of distinct edge instances, keyed by edge ids."""
        return {
            (e.id, f.id): len(e.members & f.members)
            for e, f in combinations(hypergraph.edges, 2)
        }

    def structure_report(self, hypergraph: Hypergraph, l: Optional[int] = None) -> StructureReport:
        """Aggregate structural facts; covering is only checked when l is given."""
        covering = None
        if l is not None:
            witness = self.uncovered_subset(hypergraph, l)
            covering = CoveringVerdict(
                l=l,
                holds=witness is None,
                witness=list(witness) if witness else None,
            )
        report = StructureReport(
            order=hypergraph.order,
            size=hypergraph.size,
            uniformity=hypergraph.uniformity(),
            min_degree=self.min_degree(hypergraph),
            components=self.components(hypergraph),
            cut_edges=self.cut_edges(hypergraph),
            cut_vertices=self.cut_vertices(hypergraph),
            covering=covering,
        )
        logger.debug("structure report: n=%d m=%d", report.order, report.size)
        return report
