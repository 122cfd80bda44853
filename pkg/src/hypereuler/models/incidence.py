"""Incidence graph of a hypergraph."""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from hypereuler.core.exceptions import UnknownIdError
from hypereuler.models.enums import NodeKind
from hypereuler.models.hypergraph import Hypergraph


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite v-node / e-node graph of a hypergraph.

    Nodes are integers: v-nodes first in vertex order, then e-nodes in edge
    order. Each node carries ``kind`` and ``ref`` (vertex id or edge id)
    attributes. The underlying networkx graph is frozen.
    """

    hypergraph: Hypergraph
    graph: nx.Graph = field(compare=False, hash=False, repr=False)
    _v_nodes: dict[int, int] = field(compare=False, hash=False, repr=False)
    _e_nodes: dict[int, int] = field(compare=False, hash=False, repr=False)

    @classmethod
    def from_hypergraph(cls, hypergraph: Hypergraph) -> "IncidenceGraph":
        graph = nx.Graph()
        v_nodes: dict[int, int] = {}
        e_nodes: dict[int, int] = {}
        for node, vertex in enumerate(hypergraph.vertices):
            graph.add_node(node, kind=NodeKind.VERTEX, ref=vertex)
            v_nodes[vertex] = node
        offset = hypergraph.order
        for index, edge in enumerate(hypergraph.edges):
            node = offset + index
            graph.add_node(node, kind=NodeKind.EDGE, ref=edge.id)
            e_nodes[edge.id] = node
        for edge in hypergraph.edges:
            for vertex in edge.sorted:
                graph.add_edge(v_nodes[vertex], e_nodes[edge.id])
        return cls(
            hypergraph=hypergraph,
            graph=nx.freeze(graph),
            _v_nodes=v_nodes,
            _e_nodes=e_nodes,
        )

    @property
    def node_count(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def v_nodes(self) -> list[int]:
        return list(self._v_nodes.values())

    @property
    def e_nodes(self) -> list[int]:
        return list(self._e_nodes.values())

    def v_node(self, vertex: int) -> int:
        try:
            return self._v_nodes[vertex]
        except KeyError:
            raise UnknownIdError("Vertex", vertex) from None

    def e_node(self, edge_id: int) -> int:
        try:
            return self._e_nodes[edge_id]
        except KeyError:
            raise UnknownIdError("Edge", edge_id) from None

    def kind(self, node: int) -> NodeKind:
        return self.graph.nodes[node]["kind"]

    def ref(self, node: int) -> int:
        return self.graph.nodes[node]["ref"]

    def degree(self, node: int) -> int:
        return self.graph.degree[node]

    def node_label(self, node: int) -> str:
        """Stable text name such as ``v3`` or ``e0``."""
        return f"{self.kind(node).value}{self.ref(node)}"

    def incidences(self) -> list[tuple[int, int]]:
        """All (vertex id, edge id) incidence pairs in edge order."""
        return [
            (vertex, edge.id)
            for edge in self.hypergraph.edges
            for vertex in edge.sorted
        ]
