"""Hypergraph document schema."""

from typing import List, Union

from pydantic import Field, field_validator

from hypereuler.schemas.base import BaseSchema

VertexRef = Union[int, str]


class HypergraphDocument(BaseSchema):
    """JSON form: vertices as an order or a label list, edges as vertex refs."""

    vertices: Union[int, List[str]]
    edges: List[List[VertexRef]] = Field(default_factory=list)

    @field_validator("vertices")
    @classmethod
    def validate_vertices(cls, v: Union[int, List[str]]) -> Union[int, List[str]]:
        """Negative orders are malformed; zero is reported as an empty vertex set later."""
        if isinstance(v, int) and v < 0:
            raise ValueError("vertex count cannot be negative")
        if isinstance(v, list) and len(set(v)) != len(v):
            raise ValueError("vertex labels must be unique")
        return v
