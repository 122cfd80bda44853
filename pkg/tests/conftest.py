"""Pytest configuration and fixtures."""

from itertools import combinations

import pytest

from hypereuler.config.settings import Settings
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.services.analysis_service import AnalysisService
from hypereuler.services.covering_service import CoveringService
from hypereuler.services.factor_service import FactorService
from hypereuler.services.generator_service import GeneratorService
from hypereuler.services.structure_service import StructureService
from hypereuler.services.trail_service import TrailService


@pytest.fixture
def settings() -> Settings:
    """Fresh settings, independent of the process environment cache."""
    return Settings(_env_file=None)


@pytest.fixture
def structure_service(settings: Settings) -> StructureService:
    return StructureService(settings)


@pytest.fixture
def factor_service(settings: Settings) -> FactorService:
    return FactorService(settings)


@pytest.fixture
def trail_service(settings: Settings) -> TrailService:
    return TrailService(settings)


@pytest.fixture
def covering_service(settings: Settings) -> CoveringService:
    return CoveringService(settings)


@pytest.fixture
def analysis_service(settings: Settings) -> AnalysisService:
    return AnalysisService(settings)


@pytest.fixture
def generator_service(settings: Settings) -> GeneratorService:
    return GeneratorService(settings)


@pytest.fixture
def k4_3() -> Hypergraph:
    """All four triples of {0, 1, 2, 3}."""
    return Hypergraph.from_edges(4, combinations(range(4), 3))


@pytest.fixture
def k5_4() -> Hypergraph:
    """All five 4-subsets of {0..4}; 3-covering."""
    return Hypergraph.from_edges(5, combinations(range(5), 4))


@pytest.fixture
def design_4_6() -> Hypergraph:
    """Three 4-edges on six vertices, pairwise sharing exactly two."""
    return Hypergraph.from_edges(6, [[0, 1, 2, 3], [0, 1, 4, 5], [2, 3, 4, 5]])


@pytest.fixture
def two_triples() -> Hypergraph:
    return Hypergraph.from_edges(4, [[0, 1, 2], [0, 1, 3]])


@pytest.fixture
def single_triple() -> Hypergraph:
    return Hypergraph.from_edges(3, [[0, 1, 2]])


@pytest.fixture
def two_pairs_doubled() -> Hypergraph:
    """Edges {0,1},{0,1},{2,3},{2,3}: two components."""
    return Hypergraph.from_edges(4, [[0, 1], [0, 1], [2, 3], [2, 3]])
