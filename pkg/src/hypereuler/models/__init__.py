"""Models module - immutable domain types."""

from hypereuler.models.enums import (
    AuditMode,
    BaseMethod,
    FileFormat,
    GadgetNodeKind,
    GeneratorKind,
    NamedInstance,
    NodeKind,
    RejectReason,
    Strategy,
    TourStatus,
)
from hypereuler.models.gadget import GadgetGraph, GadgetNode
from hypereuler.models.hypergraph import Edge, Hypergraph
from hypereuler.models.incidence import IncidenceGraph
from hypereuler.models.looped import LoopedIncidenceGraph
from hypereuler.models.selection import FactorSelection
from hypereuler.models.trace import ReductionStep, ReductionTrace
from hypereuler.models.trail import ClosedTrail, EulerFamily, FamilyVerdict

__all__ = [
    # Enums
    "AuditMode",
    "BaseMethod",
    "FileFormat",
    "GadgetNodeKind",
    "GeneratorKind",
    "NamedInstance",
    "NodeKind",
    "RejectReason",
    "Strategy",
    "TourStatus",
    # Hypergraph
    "Edge",
    "Hypergraph",
    "IncidenceGraph",
    "LoopedIncidenceGraph",
    # Factor
    "GadgetGraph",
    "GadgetNode",
    "FactorSelection",
    # Trails
    "ClosedTrail",
    "EulerFamily",
    "FamilyVerdict",
    # Covering
    "ReductionStep",
    "ReductionTrace",
]
