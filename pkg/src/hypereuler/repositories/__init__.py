"""Repositories module - file formats and persistence."""

from hypereuler.repositories.base import BaseRepository
from hypereuler.repositories.family_repository import (
    FamilyRepository,
    parse_selection,
    parse_trace,
    serialize_selection,
    serialize_trace,
)
from hypereuler.repositories.hypergraph_repository import HypergraphRepository

__all__ = [
    "BaseRepository",
    "FamilyRepository",
    "HypergraphRepository",
    "parse_selection",
    "parse_trace",
    "serialize_selection",
    "serialize_trace",
]
