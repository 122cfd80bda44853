"""Instance generators."""

import logging
import math
from itertools import combinations
from typing import Optional

import numpy as np

from hypereuler.config.settings import Settings, settings as default_settings
from hypereuler.core.exceptions import PreconditionError, UnknownGeneratorError
from hypereuler.models.enums import GeneratorKind, NamedInstance
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.schemas.corpus import GeneratorSpec

logger = logging.getLogger(__name__)

NAMED_INSTANCES: dict[NamedInstance, tuple[int, list[list[int]]]] = {
    NamedInstance.DESIGN_4_6: (6, [[0, 1, 2, 3], [0, 1, 4, 5], [2, 3, 4, 5]]),
    NamedInstance.FANO_LIKE: (
        7,
        [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]],
    ),
}


class GeneratorService:
    """Deterministic hypergraph generators; seeded runs use numpy's PCG64."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or default_settings

    def gen_complete(self, n: int, k: int) -> Hypergraph:
        """All k-subsets of {0..n-1}."""
        if not 1 <= k <= n:
            raise PreconditionError(f"complete hypergraph needs 1 <= k <= n, got n={n}, k={k}")
        return Hypergraph.from_edges(n, combinations(range(n), k))

    def gen_cover(self, n: int, k: int, l: int, seed: Optional[int] = None) -> Hypergraph:
        """Greedy l-covering k-hypergraph on n vertices.

        Uncovered l-subsets are visited in lexicographic order; each gets the
        k-edge around it that covers the most new l-subsets, ties going to the
        lexicographically first edge. With a seed, both the subset order and
        the candidate order are shuffled by PCG64.

        Raises:
            PreconditionError: Unless 2 <= l < k <= n
        """
        if not 2 <= l < k <= n:
            raise PreconditionError(f"cover needs 2 <= l < k <= n, got n={n}, k={k}, l={l}")
        rng = np.random.Generator(np.random.PCG64(seed)) if seed is not None else None

        subsets = list(combinations(range(n), l))
        if rng is not None:
            subsets = [subsets[i] for i in rng.permutation(len(subsets))]
        covered: set[tuple[int, ...]] = set()
        edges: list[tuple[int, ...]] = []

        for subset in subsets:
            if subset in covered:
                continue
            rest = [v for v in range(n) if v not in subset]
            candidates = [
                tuple(sorted(subset + extra)) for extra in combinations(rest, k - l)
            ]
            if rng is not None:
                candidates = [candidates[i] for i in rng.permutation(len(candidates))]
            best, best_gain = candidates[0], -1
            for candidate in candidates:
                gain = sum(1 for part in combinations(candidate, l) if part not in covered)
                if gain > best_gain:
                    best, best_gain = candidate, gain
            edges.append(best)
            covered.update(combinations(best, l))

        assert len(covered) == math.comb(n, l)
        logger.debug("cover n=%d k=%d l=%d seed=%s: %d edges", n, k, l, seed, len(edges))
        return Hypergraph.from_edges(n, edges)

    def gen_named(self, name: str) -> Hypergraph:
        """Published instance by name.

        Raises:
            UnknownGeneratorError: If the name is unknown
        """
        try:
            n, edges = NAMED_INSTANCES[NamedInstance(name)]
        except ValueError:
            raise UnknownGeneratorError(name) from None
        return Hypergraph.from_edges(n, edges)

    def generate(self, spec: GeneratorSpec) -> Hypergraph:
        """Dispatch a generator spec."""
        kind = GeneratorKind(spec.kind)
        if kind is GeneratorKind.NAMED:
            assert spec.name is not None
            return self.gen_named(spec.name)
        assert spec.n is not None and spec.k is not None
        if kind is GeneratorKind.COMPLETE:
            return self.gen_complete(spec.n, spec.k)
        assert spec.l is not None
        seed = spec.seed if kind is GeneratorKind.RANDOM_COVER else None
        return self.gen_cover(spec.n, spec.k, spec.l, seed)

    def covering_parameter(self, spec: GeneratorSpec) -> Optional[int]:
        """The l an instance is built to cover, or None when it has no l >= 2."""
        kind = GeneratorKind(spec.kind)
        if kind is GeneratorKind.NAMED:
            return 2
        if kind is GeneratorKind.COMPLETE:
            assert spec.k is not None
            return spec.k - 1 if spec.k >= 3 else None
        return spec.l
