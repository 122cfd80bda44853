"""Closed trail and Euler family models."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from hypereuler.models.enums import RejectReason


@dataclass(frozen=True)
class ClosedTrail:
    """Alternating sequence v0 e1 v1 ... et vt with v0 == vt.

    ``anchors`` holds t + 1 vertices (first == last), ``edges`` holds t edge
    ids. Structural validity against a hypergraph is checked by the trail
    service, not here, so rejected certificates can still be represented.
    """

    anchors: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def anchor_set(self) -> frozenset[int]:
        return frozenset(self.anchors)

    def steps(self) -> list[tuple[int, int, int]]:
        """(v_{i-1}, e_i, v_i) triples."""
        return [
            (self.anchors[i], self.edges[i], self.anchors[i + 1])
            for i in range(len(self.edges))
        ]

    def interleaved(self) -> tuple[int, ...]:
        """The sequence a0, e1, a1, ..., et without the closing anchor."""
        return tuple(item for pair in zip(self.anchors, self.edges) for item in pair)

    def normalized(self) -> "ClosedTrail":
        """Smallest rotation over both directions, compared by ``interleaved``."""
        t = len(self.edges)
        if t == 0 or len(self.anchors) != t + 1 or self.anchors[0] != self.anchors[-1]:
            return self
        cyclic_anchors = self.anchors[:-1]
        reverse_anchors = tuple(reversed(self.anchors))[:-1]
        reverse_edges = tuple(reversed(self.edges))
        best: tuple[int, ...] | None = None
        best_trail = self
        for anchors, edges in ((cyclic_anchors, self.edges), (reverse_anchors, reverse_edges)):
            for shift in range(t):
                rotated_anchors = anchors[shift:] + anchors[:shift]
                rotated_edges = edges[shift:] + edges[:shift]
                candidate = ClosedTrail(
                    anchors=rotated_anchors + (rotated_anchors[0],), edges=rotated_edges
                )
                key = candidate.interleaved()
                if best is None or key < best:
                    best, best_trail = key, candidate
        return best_trail


@dataclass(frozen=True)
class EulerFamily:
    """Collection of closed trails, meant to be anchor- and edge-disjoint."""

    trails: tuple[ClosedTrail, ...]

    @classmethod
    def of(cls, trails: Iterable[ClosedTrail]) -> "EulerFamily":
        return cls(trails=tuple(trails))

    def __len__(self) -> int:
        return len(self.trails)

    def edge_ids(self) -> list[int]:
        return [edge_id for trail in self.trails for edge_id in trail.edges]

    def normalized(self) -> "EulerFamily":
        """Normalize each trail and order trails by their interleaved sequence."""
        trails = [trail.normalized() for trail in self.trails]
        trails.sort(key=ClosedTrail.interleaved)
        return EulerFamily(trails=tuple(trails))


@dataclass(frozen=True)
class FamilyVerdict:
    """Outcome of checking a family; ``reason`` is the first violated clause."""

    accepted: bool
    reason: Optional[RejectReason] = None
    detail: Optional[str] = None

    @classmethod
    def accept(cls) -> "FamilyVerdict":
        return cls(accepted=True)

    @classmethod
    def reject(cls, reason: RejectReason, detail: str) -> "FamilyVerdict":
        return cls(accepted=False, reason=reason, detail=detail)
