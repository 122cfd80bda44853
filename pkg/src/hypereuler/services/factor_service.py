"""Even two-factor selection via perfect matching on a parity gadget."""

import logging
import math
from itertools import combinations
from typing import Optional

from hypereuler.config.settings import Settings, settings as default_settings
from hypereuler.core.exceptions import PreconditionError, SelectionInvariantError
from hypereuler.core.guards import ensure_within
from hypereuler.core.matching import is_perfect, max_matching
from hypereuler.models.enums import GadgetNodeKind, NodeKind
from hypereuler.models.gadget import GadgetGraph, GadgetNode
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.models.incidence import IncidenceGraph
from hypereuler.models.selection import FactorSelection

logger = logging.getLogger(__name__)


class FactorService:
    """Find a selection of two vertices per edge with every vertex used evenly.

    Such a selection is a spanning subgraph G' of the incidence graph with
    deg(e) = 2 at e-nodes and even deg(v) at v-nodes; it exists iff the
    hypergraph admits an Euler family.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or default_settings

    def build_gadget(self, incidence: IncidenceGraph) -> GadgetGraph:
        """Reduce the even two-factor problem to perfect matching.

        An e-node of degree k becomes k externals completely joined to k - 2
        cores, so exactly two externals are left for incidence edges. A v-node
        of degree d becomes a clique on d externals plus, for odd d, one aux
        node joined to all of them, so an even number of externals is left.

        Raises:
            PreconditionError: If some edge has fewer than two vertices
        """
        hypergraph = incidence.hypergraph
        nodes: list[GadgetNode] = []
        edges: list[tuple[int, int]] = []
        incidence_edges: dict[tuple[int, int], tuple[int, int]] = {}

        def add(kind: GadgetNodeKind, owner: int, slot: int) -> int:
            nodes.append(GadgetNode(kind, owner, slot))
            return len(nodes) - 1

        e_external: dict[tuple[int, int], int] = {}
        for edge in hypergraph.edges:
            k = len(edge)
            if k < 2:
                raise PreconditionError(
                    f"edge {edge.id} has {k} vertex; every edge needs at least 2",
                    witness=edge.id,
                )
            externals = []
            for slot, vertex in enumerate(edge.sorted):
                node = add(GadgetNodeKind.E_EXTERNAL, edge.id, slot)
                e_external[(vertex, edge.id)] = node
                externals.append(node)
            cores = [add(GadgetNodeKind.E_CORE, edge.id, slot) for slot in range(k - 2)]
            edges.extend((x, c) for x in externals for c in cores)

        v_external: dict[tuple[int, int], int] = {}
        for vertex in hypergraph.vertices:
            incident = [
                incidence.ref(node)
                for node in sorted(incidence.graph.neighbors(incidence.v_node(vertex)))
                if incidence.kind(node) is NodeKind.EDGE
            ]
            externals = []
            for slot, edge_id in enumerate(incident):
                node = add(GadgetNodeKind.V_EXTERNAL, vertex, slot)
                v_external[(vertex, edge_id)] = node
                externals.append(node)
            edges.extend(combinations(externals, 2))
            if len(externals) % 2:
                aux = add(GadgetNodeKind.V_AUX, vertex, 0)
                edges.extend((x, aux) for x in externals)

        for (vertex, edge_id), e_node in e_external.items():
            v_node = v_external[(vertex, edge_id)]
            key = (min(v_node, e_node), max(v_node, e_node))
            edges.append(key)
            incidence_edges[key] = (vertex, edge_id)

        gadget = GadgetGraph(
            nodes=tuple(nodes),
            edges=tuple(sorted(edges)),
            incidence_edges=incidence_edges,
        )
        logger.debug(
            "gadget built: %d nodes, %d edges", gadget.node_count, len(gadget.edges)
        )
        return gadget

    def expected_node_count(self, hypergraph: Hypergraph) -> int:
        """sum_e (2|e| - 2) + sum_v (deg(v) + [deg(v) odd])."""
        e_side = sum(2 * len(edge) - 2 for edge in hypergraph.edges)
        v_side = sum(d + d % 2 for d in hypergraph.degrees().values())
        return e_side + v_side

    def max_matching(self, gadget: GadgetGraph) -> list[tuple[int, int]]:
        """Maximum-cardinality matching of the gadget."""
        return max_matching(gadget.adjacency())

    def selection_from_matching(
        self,
        gadget: GadgetGraph,
        matching: list[tuple[int, int]],
    ) -> FactorSelection:
        """Read the chosen incidences off the matched incidence edges."""
        chosen: dict[int, list[int]] = {}
        for u, v in matching:
            pair = gadget.incidence_pair(u, v)
            if pair is not None:
                vertex, edge_id = pair
                chosen.setdefault(edge_id, []).append(vertex)
        bad = sorted(edge_id for edge_id, vertices in chosen.items() if len(vertices) != 2)
        if bad:
            raise SelectionInvariantError(f"matching picks other than two vertices at edges {bad}")
        return FactorSelection(choice={e: (vs[0], vs[1]) for e, vs in chosen.items()})

    def solve_even_two_factor(self, hypergraph: Hypergraph) -> Optional[FactorSelection]:
        """Selection from a perfect matching of the gadget, or None if none exists.

        Raises:
            PreconditionError: If some edge has fewer than two vertices
        """
        gadget = self.build_gadget(IncidenceGraph.from_hypergraph(hypergraph))
        matching = max_matching(gadget.adjacency())
        if not is_perfect(matching, gadget.node_count):
            logger.debug("no perfect matching: %d of %d nodes", 2 * len(matching), gadget.node_count)
            return None
        selection = self.selection_from_matching(gadget, matching)
        problems = selection.violations(hypergraph)
        if problems:
            raise SelectionInvariantError("; ".join(problems))
        return selection

    def brute_force_selection(self, hypergraph: Hypergraph) -> Optional[FactorSelection]:
        """First valid selection in product order of per-edge pairs, or None.

        Test oracle; the search space prod_e C(|e|, 2) is guarded.

        Raises:
            PreconditionError: If some edge has fewer than two vertices
            GuardExceededError: If the search space is too large
        """
        if any(len(edge) < 2 for edge in hypergraph.edges):
            raise PreconditionError("every edge needs at least 2 vertices")
        space = math.prod(math.comb(len(edge), 2) for edge in hypergraph.edges)
        ensure_within("brute-force selection", space, self.settings.brute_force_guard)

        options = [list(combinations(edge.sorted, 2)) for edge in hypergraph.edges]
        masks = [[(1 << u) ^ (1 << v) for u, v in pairs] for pairs in options]
        if not options:
            return FactorSelection(choice={})
        picks = [0] * len(options)
        last = len(options) - 1

        def search(index: int, parity: int) -> bool:
            if index == last:
                for i, mask in enumerate(masks[index]):
                    if mask == parity:
                        picks[index] = i
                        return True
                return False
            for i, mask in enumerate(masks[index]):
                picks[index] = i
                if search(index + 1, parity ^ mask):
                    return True
            return False

        if not search(0, 0):
            return None
        return FactorSelection(
            choice={
                edge.id: options[i][picks[i]] for i, edge in enumerate(hypergraph.edges)
            }
        )
