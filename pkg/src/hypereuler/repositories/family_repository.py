"""Euler family, factor selection and reduction trace file formats."""

import json
import re
from typing import Optional

from pydantic import ValidationError as PydanticValidationError

from hypereuler.core.exceptions import ParseError, UnknownVertexError
from hypereuler.models.enums import FileFormat
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.models.selection import FactorSelection
from hypereuler.models.trace import ReductionTrace
from hypereuler.models.trail import ClosedTrail, EulerFamily
from hypereuler.repositories.base import BaseRepository
from hypereuler.schemas.family import FamilyDocument, SelectionDocument
from hypereuler.schemas.trace import ReductionTraceDocument

EDGE_TOKEN = re.compile(r"^\((\d+)\)$")


class FamilyRepository(BaseRepository[EulerFamily]):
    """Families in text (``v0 (e1) v1 ... v0`` per line) or JSON form.

    Text uses the hypergraph's vertex labels; JSON uses vertex ids. Trails
    are normalized before serialization.
    """

    def __init__(self, hypergraph: Hypergraph, default_format: FileFormat = FileFormat.TEXT):
        self.hypergraph = hypergraph
        self.default_format = default_format
        self._by_label = {hypergraph.label(v): v for v in hypergraph.vertices}

    def parse(self, text: str) -> EulerFamily:
        if text.lstrip().startswith("{"):
            return self.parse_json(text)
        return self.parse_text(text)

    def parse_json(self, text: str) -> EulerFamily:
        try:
            return FamilyDocument.model_validate(json.loads(text)).to_model()
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
        except PydanticValidationError as exc:
            raise ParseError(f"invalid family document: {exc.errors()[0]['msg']}") from exc

    def parse_text(self, text: str) -> EulerFamily:
        trails: list[ClosedTrail] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            trails.append(self._parse_trail(line.split(), lineno))
        return EulerFamily.of(trails)

    def serialize(self, model: EulerFamily, fmt: Optional[FileFormat] = None) -> str:
        fmt = fmt or self.default_format
        family = model.normalized()
        if fmt == FileFormat.JSON:
            return FamilyDocument.from_model(family).to_json() + "\n"
        return "".join(self.format_trail(trail) + "\n" for trail in family.trails)

    def format_trail(self, trail: ClosedTrail) -> str:
        parts = [self.hypergraph.label(trail.anchors[0])]
        for edge_id, anchor in zip(trail.edges, trail.anchors[1:]):
            parts.append(f"({edge_id})")
            parts.append(self.hypergraph.label(anchor))
        return " ".join(parts)

    def _parse_trail(self, tokens: list[str], lineno: int) -> ClosedTrail:
        if len(tokens) % 2 == 0:
            raise ParseError("trail must alternate anchors and (edge) tokens", line=lineno)
        anchors: list[int] = []
        edges: list[int] = []
        for position, token in enumerate(tokens):
            if position % 2:
                match = EDGE_TOKEN.match(token)
                if match is None:
                    raise ParseError(f"expected an edge token like (3), got '{token}'", line=lineno)
                edges.append(int(match.group(1)))
            else:
                if token not in self._by_label:
                    raise UnknownVertexError(token, line=lineno)
                anchors.append(self._by_label[token])
        return ClosedTrail(anchors=tuple(anchors), edges=tuple(edges))


def serialize_selection(selection: FactorSelection) -> str:
    """JSON map edge id -> [v, v]."""
    return SelectionDocument.from_model(selection).to_json() + "\n"


def parse_selection(text: str) -> FactorSelection:
    try:
        return SelectionDocument.model_validate(json.loads(text)).to_model()
    except (json.JSONDecodeError, PydanticValidationError) as exc:
        raise ParseError(f"invalid selection document: {exc}") from exc


def serialize_trace(trace: ReductionTrace) -> str:
    return ReductionTraceDocument.from_model(trace).to_json() + "\n"


def parse_trace(text: str) -> ReductionTrace:
    try:
        return ReductionTraceDocument.model_validate(json.loads(text)).to_model()
    except (json.JSONDecodeError, PydanticValidationError) as exc:
        raise ParseError(f"invalid trace document: {exc}") from exc
