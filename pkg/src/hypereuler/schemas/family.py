"""Euler family and factor selection schemas."""

from typing import Dict, List, Optional, Tuple

from pydantic import Field

from hypereuler.models.selection import FactorSelection
from hypereuler.models.trail import ClosedTrail, EulerFamily, FamilyVerdict
from hypereuler.schemas.base import BaseSchema


class TrailDocument(BaseSchema):
    """One closed trail: t + 1 anchors, t edge ids."""

    anchors: List[int] = Field(..., min_length=1)
    edges: List[int]

    @classmethod
    def from_model(cls, trail: ClosedTrail) -> "TrailDocument":
        return cls(anchors=list(trail.anchors), edges=list(trail.edges))

    def to_model(self) -> ClosedTrail:
        return ClosedTrail(anchors=tuple(self.anchors), edges=tuple(self.edges))


class FamilyDocument(BaseSchema):
    """JSON form of an Euler family."""

    trails: List[TrailDocument]

    @classmethod
    def from_model(cls, family: EulerFamily) -> "FamilyDocument":
        return cls(trails=[TrailDocument.from_model(t) for t in family.trails])

    def to_model(self) -> EulerFamily:
        return EulerFamily.of(t.to_model() for t in self.trails)


class SelectionDocument(BaseSchema):
    """JSON map edge id -> [v, v]; keys are strings in JSON."""

    choice: Dict[int, Tuple[int, int]]

    @classmethod
    def from_model(cls, selection: FactorSelection) -> "SelectionDocument":
        return cls(choice=dict(selection.choice))

    def to_model(self) -> FactorSelection:
        return FactorSelection(choice=dict(self.choice))


class VerdictDocument(BaseSchema):
    """Result of verifying a family."""

    accepted: bool
    reason: Optional[str] = None
    detail: Optional[str] = None

    @classmethod
    def from_model(cls, verdict: FamilyVerdict) -> "VerdictDocument":
        return cls(
            accepted=verdict.accepted,
            reason=verdict.reason.value if verdict.reason else None,
            detail=verdict.detail,
        )
