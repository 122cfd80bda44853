"""Hypergraph model."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from hypereuler.core.exceptions import (
    EmptyEdgeError,
    EmptyVertexSetError,
    PreconditionError,
    UnknownIdError,
    UnknownVertexError,
)


@dataclass(frozen=True)
class Edge:
    """One edge instance: a stable id and its vertex set."""

    id: int
    members: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    @property
    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class Hypergraph:
    """Finite hypergraph with an edge multiset.

    Vertices are integer ids kept in ascending order; parsed hypergraphs use
    dense ids 0..n-1, while vertex deletion keeps the surviving ids. Edges
    carry ids that survive edge and vertex deletion, so duplicate edge sets
    remain distinct instances.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    labels: Optional[Mapping[int, str]] = field(default=None, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not self.vertices:
            raise EmptyVertexSetError()
        if list(self.vertices) != sorted(set(self.vertices)):
            raise PreconditionError("vertex ids must be unique and ascending")
        vertex_set = set(self.vertices)
        seen: set[int] = set()
        for edge in self.edges:
            if edge.id in seen:
                raise PreconditionError(f"duplicate edge id {edge.id}")
            seen.add(edge.id)
            if not edge.members:
                raise EmptyEdgeError()
            unknown = edge.members - vertex_set
            if unknown:
                raise UnknownVertexError(min(unknown))
        if self.labels is not None:
            object.__setattr__(self, "labels", MappingProxyType(dict(self.labels)))

    @classmethod
    def from_edges(
        cls,
        vertices: int | Iterable[int],
        edges: Iterable[Iterable[int]],
        labels: Optional[Sequence[str] | Mapping[int, str]] = None,
    ) -> "Hypergraph":
        """Build a hypergraph with edge ids numbered in input order.

        Args:
            vertices: Order n (vertices 0..n-1) or explicit vertex ids
            edges: Edge vertex sets
            labels: Optional labels, positional or keyed by vertex id

        Returns:
            Hypergraph instance
        """
        if isinstance(vertices, int):
            vertex_ids = tuple(range(vertices))
        else:
            vertex_ids = tuple(sorted(set(vertices)))
        label_map: Optional[dict[int, str]] = None
        if labels is not None:
            if isinstance(labels, Mapping):
                label_map = dict(labels)
            else:
                label_map = dict(zip(vertex_ids, labels))
        return cls(
            vertices=vertex_ids,
            edges=tuple(Edge(i, frozenset(e)) for i, e in enumerate(edges)),
            labels=label_map,
        )

    @property
    def order(self) -> int:
        """Number of vertices n."""
        return len(self.vertices)

    @property
    def size(self) -> int:
        """Number of edges m."""
        return len(self.edges)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(edge.id for edge in self.edges)

    @cached_property
    def _edge_index(self) -> dict[int, Edge]:
        return {edge.id: edge for edge in self.edges}

    @cached_property
    def _degrees(self) -> Counter[int]:
        counts: Counter[int] = Counter({v: 0 for v in self.vertices})
        for edge in self.edges:
            counts.update(edge.members)
        return counts

    def edge(self, edge_id: int) -> Edge:
        """Get an edge by id.

        Raises:
            UnknownIdError: If no edge has this id
        """
        try:
            return self._edge_index[edge_id]
        except KeyError:
            raise UnknownIdError("Edge", edge_id) from None

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._edge_index

    def has_vertex(self, vertex: int) -> bool:
        return vertex in self._degrees

    def degree(self, vertex: int) -> int:
        """Number of edges incident with a vertex."""
        if vertex not in self._degrees:
            raise UnknownIdError("Vertex", vertex)
        return self._degrees[vertex]

    def degrees(self) -> dict[int, int]:
        return {v: self._degrees[v] for v in self.vertices}

    def uniformity(self) -> Optional[int]:
        """Common edge cardinality, or None for mixed or empty edge sets."""
        sizes = {len(edge) for edge in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def label(self, vertex: int) -> str:
        if self.labels is not None and vertex in self.labels:
            return self.labels[vertex]
        return str(vertex)

    def without_edge(self, edge_id: int) -> "Hypergraph":
        """H minus an edge; the vertex set is unchanged."""
        self.edge(edge_id)
        return Hypergraph(
            vertices=self.vertices,
            edges=tuple(edge for edge in self.edges if edge.id != edge_id),
            labels=self.labels,
        )

    def without_vertex(self, vertex: int) -> "Hypergraph":
        """H - v: drop the vertex from every edge and discard emptied edges."""
        if not self.has_vertex(vertex):
            raise UnknownIdError("Vertex", vertex)
        edges = []
        for edge in self.edges:
            members = edge.members - {vertex}
            if members:
                edges.append(Edge(edge.id, members))
        return Hypergraph(
            vertices=tuple(v for v in self.vertices if v != vertex),
            edges=tuple(edges),
            labels=self.labels,
        )
