"""Enum definitions for models."""

from enum import Enum


class NodeKind(str, Enum):
    """Incidence graph node kind."""

    VERTEX = "v"
    EDGE = "e"


class GadgetNodeKind(str, Enum):
    """Node roles in the matching gadget."""

    E_EXTERNAL = "e-external"
    E_CORE = "e-core"
    V_EXTERNAL = "v-external"
    V_AUX = "v-aux"


class Strategy(str, Enum):
    """Euler family strategy for l-covering hypergraphs."""

    DIRECT = "direct"
    REDUCE = "reduce"


class BaseMethod(str, Enum):
    """How the base hypergraph of a solve was handled."""

    FACTOR = "factor"
    SMALL_CASE = "small_case"


class AuditMode(str, Enum):
    """Subset space explored by the Lovasz audit."""

    EXHAUSTIVE_E = "exhaustive_E"
    SAMPLED_V = "sampled_V"


class TourStatus(str, Enum):
    """Outcome of the exact Euler tour search."""

    FOUND = "found"
    NONE = "none"
    BUDGET_EXCEEDED = "budget_exceeded"


class RejectReason(str, Enum):
    """First violated clause of an Euler family check."""

    TOO_SHORT = "trail too short"
    NOT_CLOSED = "trail not closed"
    LENGTH_MISMATCH = "anchor/edge count mismatch"
    UNKNOWN_EDGE = "unknown edge id"
    UNKNOWN_VERTEX = "unknown vertex"
    NOT_INCIDENT = "anchor not in edge"
    REPEATED_ANCHOR_STEP = "consecutive anchors equal"
    REPEATED_EDGE = "edge-disjointness"
    SHARED_ANCHOR = "anchor-disjointness"
    NOT_COVERED = "edges not covered"


class GeneratorKind(str, Enum):
    """Instance generator kinds."""

    COMPLETE = "complete"
    GREEDY_COVER = "greedy_cover"
    RANDOM_COVER = "random_cover"
    NAMED = "named"


class NamedInstance(str, Enum):
    """Published instances available by name."""

    DESIGN_4_6 = "design_4_6"
    FANO_LIKE = "fano_like"


class FileFormat(str, Enum):
    """Serialization formats."""

    JSON = "json"
    TEXT = "text"
