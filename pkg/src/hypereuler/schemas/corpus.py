"""Corpus specification and result schemas."""

from typing import List, Optional

from pydantic import Field, model_validator

from hypereuler.models.enums import GeneratorKind, NamedInstance
from hypereuler.schemas.base import BaseSchema


class GeneratorSpec(BaseSchema):
    """Parameters of one generated instance."""

    kind: GeneratorKind
    n: Optional[int] = Field(None, ge=1)
    k: Optional[int] = Field(None, ge=1)
    l: Optional[int] = Field(None, ge=2)
    seed: Optional[int] = Field(None, ge=0)
    name: Optional[NamedInstance] = None

    @model_validator(mode="after")
    def check_parameters(self) -> "GeneratorSpec":
        """Per-kind parameter invariants."""
        if self.kind == GeneratorKind.NAMED:
            if self.name is None:
                raise ValueError("named instances need a name")
            return self
        if self.n is None or self.k is None:
            raise ValueError(f"{self.kind} needs n and k")
        if self.kind == GeneratorKind.COMPLETE:
            if not 1 <= self.k <= self.n:
                raise ValueError("complete needs 1 <= k <= n")
            return self
        if self.l is None or not 2 <= self.l < self.k <= self.n:
            raise ValueError("cover kinds need 2 <= l < k <= n")
        if self.kind == GeneratorKind.RANDOM_COVER and self.seed is None:
            raise ValueError("random_cover needs a seed")
        return self

    @property
    def key(self) -> str:
        """Stable instance key used to sort corpus rows."""
        if self.kind == GeneratorKind.NAMED:
            return f"named:{self.name}"
        parts = [str(self.kind), f"n{self.n:02d}", f"k{self.k}"]
        if self.l is not None:
            parts.append(f"l{self.l}")
        if self.seed is not None:
            parts.append(f"s{self.seed}")
        return ":".join(parts)


class CorpusSpec(BaseSchema):
    """Instances to run and which checks to apply."""

    instances: List[GeneratorSpec]
    audit_max_edges: int = Field(12, ge=0)
    tour_max_edges: int = Field(6, ge=0)
    tour_budget: int = Field(10**5, ge=1)
    oracle_max_space: int = Field(10**6, ge=1)
    workers: int = Field(1, ge=1)


class CorpusRow(BaseSchema):
    """Per-instance results."""

    key: str
    n: int
    m: int
    k: Optional[int] = None
    l: Optional[int] = None
    covering: bool
    expect_family: bool
    no_cut_edges: Optional[bool] = None
    cut_edge_check_ok: Optional[bool] = None
    edge_bound: Optional[int] = None
    edge_bound_ok: Optional[bool] = None
    direct_found: bool
    direct_verified: bool
    reduce_found: bool
    reduce_verified: bool
    strategies_agree: bool
    reduction_covering_ok: Optional[bool] = None
    monotone_covering_ok: Optional[bool] = None
    oracle_feasible: Optional[bool] = None
    audit_min_gamma: Optional[int] = None
    audit_min_gamma_minimal_r: Optional[int] = None
    hypotheses_hold: Optional[bool] = None
    audit_ok: Optional[bool] = None
    tour_status: Optional[str] = None
    tour_found: Optional[bool] = None
    passed: bool
    failures: List[str] = Field(default_factory=list)


class CorpusSummary(BaseSchema):
    """Aggregate corpus verdict plus the rows it was computed from."""

    prng: str
    instances: int
    families_expected: int
    families_verified: int
    infeasible_reported: int
    disagreements: int
    failures: int
    passed: bool
    rows: List[CorpusRow]
