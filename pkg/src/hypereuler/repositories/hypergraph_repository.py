"""Hypergraph file formats: JSON and plain text."""

import json
import logging
from typing import Optional, Sequence

from pydantic import ValidationError as PydanticValidationError

from hypereuler.core.exceptions import (
    EmptyEdgeError,
    EmptyVertexSetError,
    ParseError,
    UnknownVertexError,
)
from hypereuler.models.enums import FileFormat
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.repositories.base import BaseRepository
from hypereuler.schemas.hypergraph import HypergraphDocument

logger = logging.getLogger(__name__)

VERTICES_HEADER = "!vertices"


def sort_labels(labels: Sequence[str]) -> list[str]:
    """Sorted label order; all-integer label sets sort numerically."""
    if all(label.lstrip("-").isdigit() for label in labels):
        return sorted(labels, key=int)
    return sorted(labels)


def _labels_or_none(labels: Sequence[str]) -> Optional[list[str]]:
    """Drop labels that merely spell the dense ids."""
    if all(label == str(i) for i, label in enumerate(labels)):
        return None
    return list(labels)


class HypergraphRepository(BaseRepository[Hypergraph]):
    """Parse and serialize hypergraphs.

    JSON input is an object with ``vertices`` (an order n, or a list of
    labels) and ``edges``. Plain text has one edge per line, ``#`` comment
    lines, and an optional ``!vertices <n>`` header fixing the vertex set to
    0..n-1; without it the vertex set is the union of the labels.
    """

    def __init__(self, default_format: FileFormat = FileFormat.JSON):
        self.default_format = default_format

    def parse(self, text: str) -> Hypergraph:
        """Parse either format; JSON is recognised by a leading ``{``."""
        if text.lstrip().startswith("{"):
            return self.parse_json(text)
        return self.parse_text(text)

    def parse_json(self, text: str) -> Hypergraph:
        try:
            document = HypergraphDocument.model_validate(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
        except PydanticValidationError as exc:
            raise ParseError(f"invalid hypergraph document: {exc.errors()[0]['msg']}") from exc

        if isinstance(document.vertices, int):
            if document.vertices == 0:
                raise EmptyVertexSetError()
            vertex_ids = {str(v): v for v in range(document.vertices)}
            labels = None
        else:
            if not document.vertices:
                raise EmptyVertexSetError()
            ordered = sort_labels(document.vertices)
            vertex_ids = {label: i for i, label in enumerate(ordered)}
            labels = _labels_or_none(ordered)

        edges = [
            self._resolve_edge([str(ref) for ref in edge], vertex_ids, line=None)
            for edge in document.edges
        ]
        return Hypergraph.from_edges(len(vertex_ids), edges, labels=labels)

    def parse_text(self, text: str) -> Hypergraph:
        declared: Optional[int] = None
        raw_edges: list[tuple[int, list[str]]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("!"):
                declared = self._parse_header(line, lineno, declared)
                continue
            raw_edges.append((lineno, line.split()))

        if declared is not None:
            if declared == 0:
                raise EmptyVertexSetError()
            vertex_ids = {str(v): v for v in range(declared)}
            labels = None
        else:
            seen = {token for _, tokens in raw_edges for token in tokens}
            if not seen:
                raise EmptyVertexSetError()
            ordered = sort_labels(list(seen))
            vertex_ids = {label: i for i, label in enumerate(ordered)}
            labels = _labels_or_none(ordered)

        edges = [self._resolve_edge(tokens, vertex_ids, line=lineno) for lineno, tokens in raw_edges]
        logger.debug("parsed text hypergraph: n=%d m=%d", len(vertex_ids), len(edges))
        return Hypergraph.from_edges(len(vertex_ids), edges, labels=labels)

    def serialize(self, model: Hypergraph, fmt: Optional[FileFormat] = None) -> str:
        """Canonical form: each edge sorted ascending, edge order preserved."""
        fmt = fmt or self.default_format
        if fmt == FileFormat.TEXT:
            return self.serialize_text(model)
        return self.serialize_json(model)

    def serialize_json(self, model: Hypergraph) -> str:
        dense = model.vertices == tuple(range(model.order))
        if dense and model.labels is None:
            document = HypergraphDocument(
                vertices=model.order,
                edges=[list(edge.sorted) for edge in model.edges],
            )
        else:
            names = {v: model.label(v) for v in model.vertices}
            document = HypergraphDocument(
                vertices=[names[v] for v in model.vertices],
                edges=[[names[v] for v in edge.sorted] for edge in model.edges],
            )
        return document.to_json() + "\n"

    def serialize_text(self, model: Hypergraph) -> str:
        """Labels are written only when every vertex lies in some edge;
        otherwise the ``!vertices`` header and dense ids are used."""
        covered = {v for edge in model.edges for v in edge.members}
        lines: list[str] = []
        if model.labels is not None and covered == set(model.vertices):
            for edge in model.edges:
                lines.append(" ".join(model.label(v) for v in edge.sorted))
        else:
            index = {v: i for i, v in enumerate(model.vertices)}
            lines.append(f"{VERTICES_HEADER} {model.order}")
            for edge in model.edges:
                lines.append(" ".join(str(index[v]) for v in edge.sorted))
        return "\n".join(lines) + "\n"

    @staticmethod
    def _parse_header(line: str, lineno: int, declared: Optional[int]) -> int:
        parts = line.split()
        if parts[0] != VERTICES_HEADER or len(parts) != 2:
            raise ParseError(f"unknown directive '{line}'", line=lineno)
        if declared is not None:
            raise ParseError("repeated !vertices header", line=lineno)
        try:
            count = int(parts[1])
        except ValueError:
            raise ParseError(f"vertex count '{parts[1]}' is not an integer", line=lineno) from None
        if count < 0:
            raise ParseError("vertex count cannot be negative", line=lineno)
        return count

    @staticmethod
    def _resolve_edge(tokens: list[str], vertex_ids: dict[str, int], line: Optional[int]) -> list[int]:
        if not tokens:
            raise EmptyEdgeError(line=line)
        resolved: list[int] = []
        for token in tokens:
            if token not in vertex_ids:
                raise UnknownVertexError(token, line=line)
            resolved.append(vertex_ids[token])
        if len(set(resolved)) != len(resolved):
            raise ParseError("edge lists a vertex more than once", line=line)
        return resolved
