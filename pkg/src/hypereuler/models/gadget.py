"""Matching gadget for the even two-factor problem."""

from __future__ import annotations

from dataclasses import dataclass, field

from hypereuler.models.enums import GadgetNodeKind


@dataclass(frozen=True)
class GadgetNode:
    """A gadget node; ``owner`` is the vertex or edge id it belongs to."""

    kind: GadgetNodeKind
    owner: int
    slot: int


@dataclass(frozen=True)
class GadgetGraph:
    """Simple undirected graph whose perfect matchings are factor selections.

    ``nodes`` is indexed by node id. ``incidence_edges`` maps a gadget edge
    (v-external, e-external), stored with the smaller node first, to the
    incidence pair (vertex id, edge id) it represents.
    """

    nodes: tuple[GadgetNode, ...]
    edges: tuple[tuple[int, int], ...]
    incidence_edges: dict[tuple[int, int], tuple[int, int]] = field(compare=False, hash=False)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def adjacency(self) -> list[list[int]]:
        """Sorted neighbour lists indexed by node id."""
        adjacency: list[list[int]] = [[] for _ in self.nodes]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        for neighbours in adjacency:
            neighbours.sort()
        return adjacency

    def incidence_pair(self, u: int, v: int) -> tuple[int, int] | None:
        """Incidence pair for a gadget edge, or None for internal edges."""
        key = (u, v) if u < v else (v, u)
        return self.incidence_edges.get(key)
