"""Shared wiring for CLI commands."""

import sys
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path

from hypereuler.config.settings import Settings
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.repositories.base import STDIN
from hypereuler.repositories.hypergraph_repository import HypergraphRepository
from hypereuler.services.analysis_service import AnalysisService
from hypereuler.services.corpus_service import CorpusService
from hypereuler.services.covering_service import CoveringService
from hypereuler.services.factor_service import FactorService
from hypereuler.services.generator_service import GeneratorService
from hypereuler.services.structure_service import StructureService
from hypereuler.services.trail_service import TrailService


class ExitCode(IntEnum):
    """Process exit codes shared by all commands."""

    OK = 0
    REJECTED = 1
    INFEASIBLE = 2
    BUDGET_EXCEEDED = 3
    INPUT_ERROR = 4
    GUARD_EXCEEDED = 5
    INTERNAL_ERROR = 70


@dataclass
class Services:
    """Service instances sharing one settings object."""

    settings: Settings
    structure: StructureService
    factor: FactorService
    trails: TrailService
    covering: CoveringService
    analysis: AnalysisService
    generator: GeneratorService
    corpus: CorpusService
    hypergraphs: HypergraphRepository


def build_services(settings: Settings) -> Services:
    structure = StructureService(settings)
    factor = FactorService(settings)
    trails = TrailService(settings)
    return Services(
        settings=settings,
        structure=structure,
        factor=factor,
        trails=trails,
        covering=CoveringService(settings, structure, factor, trails),
        analysis=AnalysisService(settings, structure),
        generator=GeneratorService(settings),
        corpus=CorpusService(settings),
        hypergraphs=HypergraphRepository(),
    )


def load_hypergraph(services: Services, path: str) -> Hypergraph:
    return services.hypergraphs.read(path)


def write_output(text: str, path: str = STDIN) -> None:
    """Write command output to stdout or a file."""
    if path == STDIN:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(path).write_text(text, encoding="utf-8")
