"""Corpus harness: generate instances, run every check, aggregate."""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from hypereuler.config.settings import Settings, settings as default_settings
from hypereuler.core.exceptions import GuardExceededError, HypereulerError
from hypereuler.models.enums import GeneratorKind, NamedInstance, Strategy, TourStatus
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.models.trail import EulerFamily
from hypereuler.schemas.corpus import CorpusRow, CorpusSpec, CorpusSummary, GeneratorSpec
from hypereuler.services.analysis_service import AnalysisService
from hypereuler.services.covering_service import CoveringService, SolveOutcome
from hypereuler.services.factor_service import FactorService
from hypereuler.services.generator_service import GeneratorService
from hypereuler.services.structure_service import StructureService
from hypereuler.services.trail_service import TrailService

logger = logging.getLogger(__name__)

RANDOM_SEEDS = (1, 2)
COMPLETE_MAX_EDGES = 35


def default_corpus(settings: Optional[Settings] = None) -> CorpusSpec:
    """Every (l, k, n) with 2 <= l < k <= 6 and k <= n <= 12 within the size cap.

    The cap bounds C(n, l) / C(k, l), the fewest edges any l-covering can
    have. Each triple gets one greedy and two seeded random covers; complete
    hypergraphs, the named instances and single-edge instances follow.
    """
    settings = settings or default_settings
    instances: list[GeneratorSpec] = []
    for k in range(3, 7):
        for l in range(2, k):
            for n in range(k, 13):
                if math.comb(n, l) > settings.corpus_size_cap * math.comb(k, l):
                    continue
                instances.append(GeneratorSpec(kind=GeneratorKind.GREEDY_COVER, n=n, k=k, l=l))
                instances.extend(
                    GeneratorSpec(kind=GeneratorKind.RANDOM_COVER, n=n, k=k, l=l, seed=seed)
                    for seed in RANDOM_SEEDS
                )
    for k in range(3, 7):
        for n in range(k, 13):
            if math.comb(n, k) <= COMPLETE_MAX_EDGES:
                instances.append(GeneratorSpec(kind=GeneratorKind.COMPLETE, n=n, k=k))
    instances.extend(GeneratorSpec(kind=GeneratorKind.NAMED, name=name) for name in NamedInstance)
    return CorpusSpec(instances=instances, workers=settings.corpus_workers)


class CorpusService:
    """Runs the full check pipeline on each corpus instance."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or default_settings
        self.generator = GeneratorService(self.settings)
        self.structure = StructureService(self.settings)
        self.factor = FactorService(self.settings)
        self.trails = TrailService(self.settings)
        self.covering = CoveringService(self.settings, self.structure, self.factor, self.trails)
        self.analysis = AnalysisService(self.settings, self.structure)

    def run_corpus(self, spec: CorpusSpec) -> CorpusSummary:
        """Run every instance; rows come back sorted by instance key.

        Solver failures are recorded in the rows; only I/O errors escape.
        """
        settings = self._settings_for(spec)
        if spec.workers > 1:
            with ProcessPoolExecutor(max_workers=spec.workers) as pool:
                rows = list(
                    pool.map(
                        _run_instance,
                        spec.instances,
                        [spec] * len(spec.instances),
                        [settings] * len(spec.instances),
                    )
                )
        else:
            service = self if settings is self.settings else CorpusService(settings)
            rows = [service.run_instance(item, spec) for item in spec.instances]
        rows.sort(key=lambda row: row.key)

        failed = [row for row in rows if not row.passed]
        for row in failed:
            logger.warning("corpus instance %s failed: %s", row.key, "; ".join(row.failures))
        return CorpusSummary(
            prng=settings.prng,
            instances=len(rows),
            families_expected=sum(row.expect_family for row in rows),
            families_verified=sum(
                row.expect_family and row.direct_verified and row.reduce_verified for row in rows
            ),
            infeasible_reported=sum(
                not row.expect_family and not row.direct_found and not row.reduce_found
                for row in rows
            ),
            disagreements=sum(not row.strategies_agree for row in rows),
            failures=len(failed),
            passed=not failed,
            rows=rows,
        )

    def _settings_for(self, spec: CorpusSpec) -> Settings:
        """Raise the covering guard to the largest l the corpus needs."""
        needed = max(
            (self.generator.covering_parameter(item) or 0 for item in spec.instances),
            default=0,
        )
        if needed <= self.settings.cover_guard_max_l:
            return self.settings
        return self.settings.model_copy(update={"cover_guard_max_l": needed})

    def run_instance(self, item: GeneratorSpec, spec: CorpusSpec) -> CorpusRow:
        """Every check for one generated instance."""
        hypergraph = self.generator.generate(item)
        k = hypergraph.uniformity()
        l = self.generator.covering_parameter(item)
        n, m = hypergraph.order, hypergraph.size
        failures: list[str] = []
        row: dict = {"key": item.key, "n": n, "m": m, "k": k, "l": l}

        covering = l is not None and self.structure.is_l_covering(hypergraph, l)
        row["covering"] = covering
        row["expect_family"] = covering and m >= 2
        if not covering:
            failures.append("instance is not l-covering")
        else:
            assert l is not None and k is not None
            row["monotone_covering_ok"] = all(
                self.structure.is_l_covering(hypergraph, smaller) for smaller in range(2, l)
            )
            if not row["monotone_covering_ok"]:
                failures.append("covering not inherited by smaller l")

        self._structure_checks(hypergraph, k, row, failures)

        direct = self._solve(hypergraph, l, Strategy.DIRECT, failures) if covering else None
        reduce = self._solve(hypergraph, l, Strategy.REDUCE, failures) if covering else None
        row["direct_found"] = bool(direct and direct.feasible)
        row["reduce_found"] = bool(reduce and reduce.feasible)
        row["direct_verified"] = self._verified(hypergraph, direct)
        row["reduce_verified"] = self._verified(hypergraph, reduce)
        row["strategies_agree"] = row["direct_found"] == row["reduce_found"]
        if row["expect_family"]:
            if not row["direct_verified"]:
                failures.append("direct strategy produced no verified family")
            if not row["reduce_verified"]:
                failures.append("reduce strategy produced no verified family")
        elif row["direct_found"] or row["reduce_found"]:
            failures.append("family reported for an instance with fewer than two edges")
        if not row["strategies_agree"]:
            failures.append("strategies disagree on feasibility")

        if covering and m >= 2 and l is not None and l > 2:
            row["reduction_covering_ok"] = self._reduction_keeps_covering(hypergraph, l)
            if not row["reduction_covering_ok"]:
                failures.append("reduction lost the covering property")

        self._oracle(hypergraph, spec, row, failures)
        self._audit(hypergraph, spec, row, failures)
        self._tour(hypergraph, spec, row, failures)

        row["passed"] = not failures
        row["failures"] = failures
        logger.debug("corpus instance %s: %s", item.key, "ok" if not failures else failures)
        return CorpusRow(**row)

    def _structure_checks(
        self, hypergraph: Hypergraph, k: Optional[int], row: dict, failures: list[str]
    ) -> None:
        cut_edges = self.structure.cut_edges(hypergraph)
        row["no_cut_edges"] = not cut_edges
        by_definition = [e for e in hypergraph.edge_ids if self.structure.is_cut_edge(hypergraph, e)]
        agree = cut_edges == by_definition
        if not agree:
            failures.append("cut edge characterizations disagree")
        two_covering = row["covering"] and k is not None and k >= 4 and hypergraph.size >= 2
        row["cut_edge_check_ok"] = agree and (not two_covering or not cut_edges)
        if agree and not row["cut_edge_check_ok"]:
            failures.append(f"cut edges {cut_edges} in a 2-covering hypergraph")

        if two_covering and k is not None:
            bound = self.analysis.min_edges_bound(hypergraph.order, k)
            if bound.applicable:
                row["edge_bound"] = bound.value
                row["edge_bound_ok"] = hypergraph.size >= bound.value
                if not row["edge_bound_ok"]:
                    failures.append(f"m={hypergraph.size} below the edge bound {bound.value}")

    def _solve(
        self, hypergraph: Hypergraph, l: Optional[int], strategy: Strategy, failures: list[str]
    ) -> Optional[SolveOutcome]:
        assert l is not None
        try:
            return self.covering.solve_l_covering(hypergraph, l, strategy)
        except HypereulerError as exc:
            failures.append(f"{strategy.value}: {exc.message}")
            return None

    def _verified(self, hypergraph: Hypergraph, outcome: Optional[SolveOutcome]) -> bool:
        if outcome is None or outcome.family is None:
            return False
        return self.trails.verify_family(hypergraph, outcome.family).accepted

    def _reduction_keeps_covering(self, hypergraph: Hypergraph, l: int) -> bool:
        chain, _ = self.covering.reduce_to(hypergraph, l)
        return all(
            self.structure.is_l_covering(reduced, l - depth)
            for depth, reduced in enumerate(chain)
        )

    def _oracle(
        self, hypergraph: Hypergraph, spec: CorpusSpec, row: dict, failures: list[str]
    ) -> None:
        if any(len(edge) < 2 for edge in hypergraph.edges):
            return
        space = math.prod(math.comb(len(edge), 2) for edge in hypergraph.edges)
        if space > spec.oracle_max_space:
            return
        try:
            selection = self.factor.brute_force_selection(hypergraph)
        except GuardExceededError:
            return
        row["oracle_feasible"] = selection is not None
        if row["covering"] and row["oracle_feasible"] != row["direct_found"]:
            failures.append("matching and brute-force oracle disagree")

    def _audit(
        self, hypergraph: Hypergraph, spec: CorpusSpec, row: dict, failures: list[str]
    ) -> None:
        if hypergraph.size > spec.audit_max_edges or hypergraph.uniformity() is None:
            return
        if 3**hypergraph.size > self.settings.audit_exhaustive_guard:
            return
        report = self.analysis.audit_lovasz(hypergraph)
        minimal = self.analysis.audit_lovasz(
            hypergraph, r=self.analysis.minimal_even_r(hypergraph)
        )
        row["audit_min_gamma"] = report.minimum.value
        row["audit_min_gamma_minimal_r"] = minimal.minimum.value
        row["hypotheses_hold"] = self.analysis.lovasz_hypotheses(hypergraph).verified_exhaustively

        checks: list[bool] = []
        if row["hypotheses_hold"]:
            checks.append(report.minimum.value >= 0)
        if row["direct_found"]:
            checks.append(report.minimum.value >= 0 and minimal.minimum.value >= 0)
        elif hypergraph.size == 1:
            checks.append(report.minimum.value == -2 and report.minimum.t == ["e0"])
        row["audit_ok"] = all(checks) if checks else None
        if row["audit_ok"] is False:
            failures.append(
                f"audit minimum {report.minimum.value} (minimal r: {minimal.minimum.value})"
            )

    def _tour(
        self, hypergraph: Hypergraph, spec: CorpusSpec, row: dict, failures: list[str]
    ) -> None:
        if not 2 <= hypergraph.size <= spec.tour_max_edges:
            return
        if any(len(edge) < 2 for edge in hypergraph.edges):
            return
        outcome = self.trails.euler_tour_exact(hypergraph, spec.tour_budget)
        row["tour_status"] = outcome.status.value
        row["tour_found"] = outcome.status is TourStatus.FOUND
        if outcome.trail is not None:
            verdict = self.trails.verify_family(hypergraph, EulerFamily.of([outcome.trail]))
            if not verdict.accepted or outcome.trail.length != hypergraph.size:
                failures.append(f"exact tour rejected: {verdict.detail}")


def _run_instance(item: GeneratorSpec, spec: CorpusSpec, settings: Settings) -> CorpusRow:
    return CorpusService(settings).run_instance(item, spec)
