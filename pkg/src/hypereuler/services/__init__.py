"""Services module - solver logic layer."""

from hypereuler.services.structure_service import StructureService
from hypereuler.services.factor_service import FactorService
from hypereuler.services.trail_service import TourOutcome, TrailService
from hypereuler.services.covering_service import CoveringService, SolveOutcome
from hypereuler.services.analysis_service import AnalysisService
from hypereuler.services.generator_service import GeneratorService
from hypereuler.services.corpus_service import CorpusService, default_corpus

__all__ = [
    "StructureService",
    "FactorService",
    "TrailService",
    "TourOutcome",
    "CoveringService",
    "SolveOutcome",
    "AnalysisService",
    "GeneratorService",
    "CorpusService",
    "default_corpus",
]
