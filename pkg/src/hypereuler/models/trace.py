"""Vertex-deletion reduction trace."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping


@dataclass(frozen=True)
class ReductionStep:
    """One deletion of a vertex v with its edge map.

    ``removed`` maps each edge id to the vertex its image lost: v itself for
    edges containing v, otherwise the tie-break vertex. Edge ids are kept by
    the reduced hypergraph, so ``edge_map`` is the identity on ids and its
    inverse is what lifting applies.
    """

    deleted_vertex: int
    removed: Mapping[int, int]
    edge_map: Mapping[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "removed", MappingProxyType(dict(sorted(self.removed.items()))))
        object.__setattr__(self, "edge_map", MappingProxyType(dict(sorted(self.edge_map.items()))))

    def __hash__(self) -> int:
        return hash((self.deleted_vertex, tuple(self.removed.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReductionStep):
            return NotImplemented
        return (
            self.deleted_vertex == other.deleted_vertex
            and dict(self.removed) == dict(other.removed)
            and dict(self.edge_map) == dict(other.edge_map)
        )

    def inverse_map(self) -> dict[int, int]:
        """Reduced edge id -> original edge id."""
        return {reduced: original for original, reduced in self.edge_map.items()}

    def is_bijective(self) -> bool:
        return len(set(self.edge_map.values())) == len(self.edge_map)


@dataclass(frozen=True)
class ReductionTrace:
    """Ordered reduction steps from the input hypergraph down to the base."""

    steps: tuple[ReductionStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def then(self, step: ReductionStep) -> "ReductionTrace":
        return ReductionTrace(steps=self.steps + (step,))
