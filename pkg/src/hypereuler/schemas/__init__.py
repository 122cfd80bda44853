"""Schemas module - Pydantic schemas for files and command output."""

from hypereuler.schemas.base import BaseSchema, ErrorDetail, ErrorResponse
from hypereuler.schemas.corpus import CorpusRow, CorpusSpec, CorpusSummary, GeneratorSpec
from hypereuler.schemas.family import (
    FamilyDocument,
    SelectionDocument,
    TrailDocument,
    VerdictDocument,
)
from hypereuler.schemas.hypergraph import HypergraphDocument
from hypereuler.schemas.report import (
    AuditReport,
    BoundReport,
    ComponentsReport,
    CoveringVerdict,
    GammaReport,
    LovaszHypotheses,
    PairsumReport,
    SolveReport,
    StructureReport,
    TourReport,
    XConditionAudit,
    XConditionReport,
)
from hypereuler.schemas.trace import ReductionStepDocument, ReductionTraceDocument

__all__ = [
    # Base
    "BaseSchema",
    "ErrorDetail",
    "ErrorResponse",
    # Files
    "HypergraphDocument",
    "FamilyDocument",
    "TrailDocument",
    "SelectionDocument",
    "VerdictDocument",
    "ReductionStepDocument",
    "ReductionTraceDocument",
    # Reports
    "AuditReport",
    "BoundReport",
    "ComponentsReport",
    "CoveringVerdict",
    "GammaReport",
    "LovaszHypotheses",
    "PairsumReport",
    "SolveReport",
    "StructureReport",
    "TourReport",
    "XConditionAudit",
    "XConditionReport",
    # Corpus
    "CorpusRow",
    "CorpusSpec",
    "CorpusSummary",
    "GeneratorSpec",
]
