"""Custom exception classes."""

from typing import Any, Dict, List, Optional


class HypereulerError(Exception):
    """Base exception for the hypereuler solver."""

    def __init__(
        self,
        message: str,
        code: str = "INTERNAL_ERROR",
        exit_code: int = 70,
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        self.message = message
        self.code = code
        self.exit_code = exit_code
        self.errors = errors or []
        super().__init__(self.message)


class ParseError(HypereulerError):
    """Serialized hypergraph or family could not be read."""

    def __init__(self, message: str, code: str = "MALFORMED", line: Optional[int] = None):
        errors = [{"field": f"line {line}", "message": message}] if line is not None else None
        super().__init__(message=message, code=code, exit_code=4, errors=errors)
        self.line = line


class EmptyVertexSetError(ParseError):
    """Hypergraph has no vertices."""

    def __init__(self) -> None:
        super().__init__("empty vertex set", code="EMPTY_VERTEX_SET")


class UnknownVertexError(ParseError):
    """Edge references a vertex outside the vertex set."""

    def __init__(self, vertex: Any, line: Optional[int] = None):
        super().__init__(
            f"edge references unknown vertex '{vertex}'",
            code="UNKNOWN_VERTEX",
            line=line,
        )
        self.vertex = vertex


class EmptyEdgeError(ParseError):
    """Edge of cardinality 0."""

    def __init__(self, line: Optional[int] = None):
        super().__init__("edge of cardinality 0", code="EMPTY_EDGE", line=line)


class UnknownIdError(HypereulerError):
    """Edge or vertex id not present in the hypergraph."""

    def __init__(self, kind: str, identifier: Any):
        super().__init__(
            message=f"{kind} with id '{identifier}' not found",
            code="UNKNOWN_ID",
            exit_code=4,
        )


class PreconditionError(HypereulerError):
    """Operation precondition violated."""

    def __init__(self, message: str, witness: Any = None):
        errors = [{"field": "witness", "message": str(witness)}] if witness is not None else None
        super().__init__(
            message=message,
            code="PRECONDITION_VIOLATED",
            exit_code=4,
            errors=errors,
        )
        self.witness = witness


class CoveringViolationError(PreconditionError):
    """Hypergraph is not l-covering; carries an uncovered l-subset."""

    def __init__(self, l: int, subset: tuple[int, ...]):
        super().__init__(
            message=f"hypergraph is not {l}-covering",
            witness=list(subset),
        )
        self.code = "NOT_COVERING"
        self.subset = subset


class IntersectionPreconditionError(PreconditionError):
    """Edge intersection requirements do not hold; carries the edge pair."""

    def __init__(self, message: str, pair: Optional[tuple[int, int]] = None):
        super().__init__(message=message, witness=list(pair) if pair else None)
        self.code = "INTERSECTION_PRECONDITION"
        self.pair = pair


class GuardExceededError(HypereulerError):
    """Instance is larger than a configured guard allows."""

    def __init__(self, guard: str, value: int, limit: int):
        super().__init__(
            message=f"{guard} guard exceeded: {value} > {limit}",
            code="GUARD_EXCEEDED",
            exit_code=5,
        )
        self.guard = guard
        self.value = value
        self.limit = limit


class SelectionInvariantError(HypereulerError):
    """Factor selection does not satisfy its invariants."""

    def __init__(self, message: str):
        super().__init__(message=message, code="INVALID_SELECTION", exit_code=4)


class FamilyRejectedError(HypereulerError):
    """A family that had to verify was rejected."""

    def __init__(self, reason: str, detail: Optional[str] = None):
        message = f"family rejected: {reason}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message=message, code="FAMILY_REJECTED", exit_code=1)
        self.reason = reason


class ConstructionFailedError(HypereulerError):
    """A published construction produced an output that failed verification."""

    def __init__(self, construction: str, reason: str):
        super().__init__(
            message=f"{construction} construction failed verification: {reason}",
            code="CONSTRUCTION_FAILED",
            exit_code=70,
        )


class UnknownGeneratorError(HypereulerError):
    """Unknown named instance or generator kind."""

    def __init__(self, name: str):
        super().__init__(
            message=f"unknown generator '{name}'",
            code="UNKNOWN_GENERATOR",
            exit_code=4,
        )
