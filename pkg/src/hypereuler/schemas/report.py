"""Report schemas for structure checks, audits and bounds."""

from typing import Dict, List, Optional, Tuple

from pydantic import Field, model_validator

from hypereuler.models.enums import AuditMode, TourStatus
from hypereuler.schemas.base import BaseSchema
from hypereuler.schemas.family import FamilyDocument, SelectionDocument, TrailDocument
from hypereuler.schemas.trace import ReductionTraceDocument


class ComponentsReport(BaseSchema):
    """Vertex partition into connected components."""

    count: int
    classes: List[List[int]]


class CoveringVerdict(BaseSchema):
    """l-covering check with witness."""

    l: int
    holds: bool
    witness: Optional[List[int]] = None


class StructureReport(BaseSchema):
    """Structural summary produced by ``check``."""

    order: int
    size: int
    uniformity: Optional[int] = None
    min_degree: int
    components: ComponentsReport
    cut_edges: List[int]
    cut_vertices: List[int]
    covering: Optional[CoveringVerdict] = None

    @property
    def predicates_hold(self) -> bool:
        """Connected, no cut edges, and covering when requested."""
        covering_ok = self.covering is None or self.covering.holds
        return self.components.count == 1 and not self.cut_edges and covering_ok


class GammaReport(BaseSchema):
    """Terms of the Lovasz functional for one (S, T) pair."""

    s: List[str]
    t: List[str]
    r: int
    sum_f_s: int
    sum_excess_t: int
    epsilon: int
    q: int
    value: int

    @model_validator(mode="after")
    def check_identity(self) -> "GammaReport":
        """gamma = sum f(S) + sum (deg - f)(T) - eps(S, T) - q(S, T)."""
        expected = self.sum_f_s + self.sum_excess_t - self.epsilon - self.q
        if self.value != expected:
            raise ValueError(f"gamma value {self.value} != term identity {expected}")
        return self


class AuditReport(BaseSchema):
    """Minimum gamma over an explored subset space."""

    mode: AuditMode
    r: int
    evaluated: int
    pruned: int = 0
    sampled: int = 0
    seed: Optional[int] = None
    prng: Optional[str] = None
    minimum: GammaReport

    @property
    def certifies_infeasible(self) -> bool:
        return self.minimum.value < 0


class XConditionReport(BaseSchema):
    """|X| >= 2 floor((c(G* - X) + 3) / k) for one edge set X."""

    x: List[int]
    k: int
    components: int
    size: int
    bound: int
    holds: bool
    negation_bound: str = Field(..., description="2(c+3)/k - 1 as an exact fraction")


class XConditionAudit(BaseSchema):
    """X-condition over all (or sampled) X with |X| >= 2."""

    exhaustive: bool
    checked: int
    all_hold: bool
    first_violation: Optional[XConditionReport] = None


class LovaszHypotheses(BaseSchema):
    """No cut edges plus the X-condition."""

    no_cut_edges: bool
    x_condition: XConditionAudit

    @property
    def hold(self) -> bool:
        return self.no_cut_edges and self.x_condition.all_hold

    @property
    def verified_exhaustively(self) -> bool:
        return self.hold and self.x_condition.exhaustive


class BoundReport(BaseSchema):
    """min_edges_bound value with the applicability flag."""

    n: int
    k: int
    value: int
    applicable: bool


class PairsumReport(BaseSchema):
    """Maximizer of sum C(x_i, 2) over compositions with parts >= k."""

    n: int
    k: int
    q: int
    argmax: Tuple[int, ...]
    value: int


class TourReport(BaseSchema):
    """Exact Euler tour search result."""

    status: TourStatus
    explored: int
    budget: int
    trail: Optional[TrailDocument] = None


class SolveReport(BaseSchema):
    """Output of ``solve`` in JSON form."""

    feasible: bool
    strategy: str
    base_method: Optional[str] = None
    family: Optional[FamilyDocument] = None
    selection: Optional[SelectionDocument] = None
    trace: Optional[ReductionTraceDocument] = None
    degrees: Optional[Dict[int, int]] = None
