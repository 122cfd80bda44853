"""Reduction trace schemas."""

from typing import Dict, List

from hypereuler.models.trace import ReductionStep, ReductionTrace
from hypereuler.schemas.base import BaseSchema


class ReductionStepDocument(BaseSchema):
    """One vertex deletion; ``removed`` maps edge id -> vertex dropped from it."""

    deleted_vertex: int
    removed: Dict[int, int]
    edge_map: Dict[int, int]

    @classmethod
    def from_model(cls, step: ReductionStep) -> "ReductionStepDocument":
        return cls(
            deleted_vertex=step.deleted_vertex,
            removed=dict(step.removed),
            edge_map=dict(step.edge_map),
        )

    def to_model(self) -> ReductionStep:
        return ReductionStep(
            deleted_vertex=self.deleted_vertex,
            removed=self.removed,
            edge_map=self.edge_map,
        )


class ReductionTraceDocument(BaseSchema):
    """Ordered reduction steps."""

    steps: List[ReductionStepDocument]

    @classmethod
    def from_model(cls, trace: ReductionTrace) -> "ReductionTraceDocument":
        return cls(steps=[ReductionStepDocument.from_model(s) for s in trace.steps])

    def to_model(self) -> ReductionTrace:
        return ReductionTrace(steps=tuple(s.to_model() for s in self.steps))
