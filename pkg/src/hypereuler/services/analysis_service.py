"""Counting bounds and the Lovasz-condition audit."""

import logging
import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from hypereuler.config.settings import Settings, settings as default_settings
from hypereuler.core.exceptions import PreconditionError
from hypereuler.core.guards import ensure_within
from hypereuler.core.unionfind import partition
from hypereuler.models.enums import AuditMode
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.models.incidence import IncidenceGraph
from hypereuler.models.looped import LoopedIncidenceGraph
from hypereuler.schemas.report import (
    AuditReport,
    BoundReport,
    GammaReport,
    LovaszHypotheses,
    PairsumReport,
    XConditionAudit,
    XConditionReport,
)
from hypereuler.services.structure_service import StructureService

logger = logging.getLogger(__name__)

# (sum f(S), sum (deg - f)(T), eps(S, T), q(S, T))
Terms = tuple[int, int, int, int]

_NONE, _IN_S, _IN_T = 0, 1, 2


def _value(terms: Terms) -> int:
    sum_f_s, sum_excess_t, epsilon, q = terms
    return sum_f_s + sum_excess_t - epsilon - q


class AnalysisService:
    """Gamma functional, X-condition and edge-count bounds."""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        structure: Optional[StructureService] = None,
    ):
        self.settings = settings or default_settings
        self.structure = structure or StructureService(self.settings)

    def gamma(
        self,
        looped: LoopedIncidenceGraph,
        s: Iterable[int],
        t: Iterable[int],
    ) -> GammaReport:
        """Evaluate gamma(S, T) on the looped incidence graph.

        Args:
            looped: Incidence graph with r symbolic loops per v-node
            s: Node ids of S
            t: Node ids of T, disjoint from S

        Raises:
            PreconditionError: If S and T intersect
        """
        s_nodes, t_nodes = set(s), set(t)
        shared = sorted(s_nodes & t_nodes)
        if shared:
            raise PreconditionError("S and T must be disjoint", witness=shared)
        terms = self._terms(looped, s_nodes, t_nodes)
        sum_f_s, sum_excess_t, epsilon, q = terms
        base = looped.base
        return GammaReport(
            s=[base.node_label(x) for x in sorted(s_nodes)],
            t=[base.node_label(x) for x in sorted(t_nodes)],
            r=looped.r,
            sum_f_s=sum_f_s,
            sum_excess_t=sum_excess_t,
            epsilon=epsilon,
            q=q,
            value=_value(terms),
        )

    def _terms(self, looped: LoopedIncidenceGraph, s: set[int], t: set[int]) -> Terms:
        """All four gamma terms for arbitrary disjoint node sets.

        Loops never leave their v-node, so epsilon and connectivity come from
        the base graph; r enters only through f and the degrees.
        """
        graph = looped.base.graph
        sum_f_s = sum(looped.f(x) for x in s)
        sum_excess_t = sum(looped.degree(x) - looped.f(x) for x in t)
        epsilon = sum(1 for u, v in graph.edges if (u in s and v in t) or (u in t and v in s))

        removed = s | t
        remaining = [x for x in graph.nodes if x not in removed]
        links = [(u, v) for u, v in graph.edges if u not in removed and v not in removed]
        q = 0
        for component in partition(remaining, links):
            f_sum = sum(looped.f(x) for x in component)
            to_t = sum(1 for x in component for y in graph.neighbors(x) if y in t)
            odd = (f_sum + to_t) % 2 == 1
            if looped.r % 2 == 0:
                # f is even everywhere, so only the T-edges decide parity
                assert odd == (to_t % 2 == 1)
            q += odd
        return sum_f_s, sum_excess_t, epsilon, q

    def _edge_terms(
        self,
        hypergraph: Hypergraph,
        r: int,
        assignment: list[int],
    ) -> Terms:
        """Gamma terms when S and T hold e-nodes only.

        Every v-node survives, so components are the vertex classes of the
        edges left over; e-nodes carry f = 2 and never change parity.
        """
        edges = hypergraph.edges
        sum_f_s = 2 * assignment.count(_IN_S)
        sum_excess_t = 0
        t_degree: dict[int, int] = {}
        remaining = []
        for edge, side in zip(edges, assignment):
            if side == _IN_T:
                sum_excess_t += len(edge) - 2
                for v in edge.members:
                    t_degree[v] = t_degree.get(v, 0) + 1
            elif side == _NONE:
                remaining.append(edge.members)
        q = 0
        for component in partition(hypergraph.vertices, remaining):
            parity = r * len(component) + sum(t_degree.get(v, 0) for v in component)
            q += parity % 2
        return sum_f_s, sum_excess_t, 0, q

    def audit_lovasz(
        self,
        hypergraph: Hypergraph,
        mode: AuditMode = AuditMode.EXHAUSTIVE_E,
        r: Optional[int] = None,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> AuditReport:
        """Minimum gamma over disjoint (S, T).

        ``exhaustive_E`` enumerates every assignment of edges to S, T or
        neither; assignments whose lower bound cannot beat the running
        minimum are pruned. ``sampled_V`` adds seeded samples of node sets
        meeting V. A negative minimum certifies that no factor exists.

        Raises:
            GuardExceededError: If 3^m exceeds the exhaustive guard
        """
        incidence = IncidenceGraph.from_hypergraph(hypergraph)
        looped = LoopedIncidenceGraph(
            base=incidence,
            r=LoopedIncidenceGraph.default_r(incidence) if r is None else r,
        )
        space = 3**hypergraph.size
        if mode == AuditMode.EXHAUSTIVE_E or space <= self.settings.audit_exhaustive_guard:
            ensure_within("exhaustive audit", space, self.settings.audit_exhaustive_guard)
            best_terms, best_assignment, evaluated, pruned = self._exhaustive_edges(
                hypergraph, looped.r
            )
            e_nodes = incidence.e_nodes
            best_s = {e_nodes[i] for i, side in enumerate(best_assignment) if side == _IN_S}
            best_t = {e_nodes[i] for i, side in enumerate(best_assignment) if side == _IN_T}
            minimum = self.gamma(looped, best_s, best_t)
            assert minimum.value == _value(best_terms)
        else:
            logger.info("edge space 3^%d over the guard; sampling only", hypergraph.size)
            minimum = self.gamma(looped, (), ())
            evaluated, pruned = 1, 0

        if mode == AuditMode.EXHAUSTIVE_E:
            logger.debug("exhaustive audit: %d evaluated, %d pruned", evaluated, pruned)
            return AuditReport(
                mode=AuditMode.EXHAUSTIVE_E,
                r=looped.r,
                evaluated=evaluated,
                pruned=pruned,
                minimum=minimum,
            )

        count = self.settings.audit_samples if samples is None else samples
        seed = self.settings.audit_seed if seed is None else seed
        rng = np.random.Generator(np.random.PCG64(seed))
        v_nodes = incidence.v_nodes
        for _ in range(count):
            sides = rng.integers(0, 3, size=incidence.node_count)
            while not any(sides[x] for x in v_nodes):
                sides = rng.integers(0, 3, size=incidence.node_count)
            s = {x for x in range(incidence.node_count) if sides[x] == _IN_S}
            t = {x for x in range(incidence.node_count) if sides[x] == _IN_T}
            if _value(self._terms(looped, s, t)) < minimum.value:
                minimum = self.gamma(looped, s, t)

        return AuditReport(
            mode=AuditMode.SAMPLED_V,
            r=looped.r,
            evaluated=evaluated + count,
            pruned=pruned,
            sampled=count,
            seed=seed,
            prng=self.settings.prng,
            minimum=minimum,
        )

    def _exhaustive_edges(
        self, hypergraph: Hypergraph, r: int
    ) -> tuple[Terms, list[int], int, int]:
        """Depth-first enumeration over edge assignments in product order.

        Components never outnumber the vertices, so q <= n; with every edge
        of size >= 2 the positive terms only grow along a branch, which
        bounds gamma from below.
        """
        edges = hypergraph.edges
        m = len(edges)
        n = hypergraph.order
        monotone = all(len(edge) >= 2 for edge in edges)
        assignment = [_NONE] * m
        best_terms = self._edge_terms(hypergraph, r, assignment)
        best_assignment = list(assignment)
        evaluated, pruned = 1, 0

        def subtree_size(index: int) -> int:
            return 3 ** (m - index)

        def visit(index: int, cost: int, fresh: bool) -> None:
            nonlocal best_terms, best_assignment, evaluated, pruned
            if monotone and cost - n >= _value(best_terms):
                pruned += subtree_size(index) - (0 if fresh else 1)
                return
            if index == m:
                if fresh:
                    terms = self._edge_terms(hypergraph, r, assignment)
                    evaluated += 1
                    if _value(terms) < _value(best_terms):
                        best_terms, best_assignment = terms, list(assignment)
                return
            for side, extra in ((_NONE, 0), (_IN_S, 2), (_IN_T, len(edges[index]) - 2)):
                assignment[index] = side
                visit(index + 1, cost + extra, fresh or side != _NONE)
            assignment[index] = _NONE

        visit(0, 0, False)
        return best_terms, best_assignment, evaluated, pruned

    def minimal_even_r(self, hypergraph: Hypergraph) -> int:
        """Smallest even r not below the maximum vertex degree."""
        top = max(hypergraph.degrees().values())
        return top + top % 2

    def check_x_condition(self, hypergraph: Hypergraph, x: Iterable[int]) -> XConditionReport:
        """|X| >= 2 floor((c(G* - X) + 3) / k) for one edge set X.

        Raises:
            PreconditionError: If |X| < 2 or H is not uniform
            UnknownIdError: If X names an unknown edge
        """
        edge_ids = sorted(set(x))
        if len(edge_ids) < 2:
            raise PreconditionError(f"X needs at least 2 edges, got {len(edge_ids)}")
        k = hypergraph.uniformity()
        if k is None:
            raise PreconditionError("X-condition needs a uniform hypergraph")
        for edge_id in edge_ids:
            hypergraph.edge(edge_id)
        return self._x_report(hypergraph, k, edge_ids)

    def _x_report(self, hypergraph: Hypergraph, k: int, edge_ids: list[int]) -> XConditionReport:
        excluded = set(edge_ids)
        kept = (edge.members for edge in hypergraph.edges if edge.id not in excluded)
        c = len(partition(hypergraph.vertices, kept))
        bound = 2 * ((c + 3) // k)
        return XConditionReport(
            x=edge_ids,
            k=k,
            components=c,
            size=len(edge_ids),
            bound=bound,
            holds=len(edge_ids) >= bound,
            negation_bound=str(Fraction(2 * (c + 3), k) - 1),
        )

    def audit_x_condition(self, hypergraph: Hypergraph, seed: Optional[int] = None) -> XConditionAudit:
        """X-condition over every X with |X| >= 2, or a seeded sample beyond the guard."""
        k = hypergraph.uniformity()
        if k is None:
            raise PreconditionError("X-condition needs a uniform hypergraph")
        ids = list(hypergraph.edge_ids)
        m = len(ids)
        if m < 2:
            return XConditionAudit(exhaustive=True, checked=0, all_hold=True)

        if 2**m <= self.settings.x_condition_exhaustive_guard:
            checked = 0
            for size in range(2, m + 1):
                for x in combinations(ids, size):
                    checked += 1
                    report = self._x_report(hypergraph, k, list(x))
                    if not report.holds:
                        return XConditionAudit(
                            exhaustive=True, checked=checked, all_hold=False, first_violation=report
                        )
            return XConditionAudit(exhaustive=True, checked=checked, all_hold=True)

        rng = np.random.Generator(np.random.PCG64(self.settings.audit_seed if seed is None else seed))
        samples = self.settings.x_condition_samples
        for checked in range(1, samples + 1):
            mask = rng.integers(0, 2, size=m)
            while mask.sum() < 2:
                mask = rng.integers(0, 2, size=m)
            report = self._x_report(hypergraph, k, [ids[i] for i in range(m) if mask[i]])
            if not report.holds:
                return XConditionAudit(
                    exhaustive=False, checked=checked, all_hold=False, first_violation=report
                )
        return XConditionAudit(exhaustive=False, checked=samples, all_hold=True)

    def lovasz_hypotheses(self, hypergraph: Hypergraph) -> LovaszHypotheses:
        """No cut edges and the X-condition."""
        return LovaszHypotheses(
            no_cut_edges=not self.structure.cut_edges(hypergraph),
            x_condition=self.audit_x_condition(hypergraph),
        )

    def min_edges_bound(self, n: int, k: int) -> BoundReport:
        """2 floor((n + 3) / k); applicable for k >= 4 and n > 3k/2."""
        if k < 1:
            raise PreconditionError(f"uniformity k={k} must be positive")
        return BoundReport(n=n, k=k, value=2 * ((n + 3) // k), applicable=k >= 4 and 2 * n > 3 * k)

    def pair_cover_bound(self, n: int, k: int) -> int:
        """ceil(n(n-1) / (k(k-1))): edges needed to cover all pairs."""
        if k < 2:
            raise PreconditionError(f"uniformity k={k} must be at least 2")
        return -(-n * (n - 1) // (k * (k - 1)))

    def max_component_pairsum(self, n: int, k: int, q: int) -> PairsumReport:
        """Maximizer (k, ..., k, n - k(q - 1)) of sum C(x_i, 2) with parts >= k.

        Raises:
            PreconditionError: If n < qk, q < 1 or k < 1
        """
        self._check_pairsum(n, k, q)
        argmax = (k,) * (q - 1) + (n - k * (q - 1),)
        return PairsumReport(
            n=n, k=k, q=q, argmax=argmax, value=sum(math.comb(x, 2) for x in argmax)
        )

    def max_component_pairsum_brute(self, n: int, k: int, q: int) -> PairsumReport:
        """First maximizer over all compositions of n into q parts >= k, lexicographically."""
        self._check_pairsum(n, k, q)
        best: Optional[tuple[int, ...]] = None
        best_value = -1
        for parts in self._compositions(n, k, q):
            value = sum(math.comb(x, 2) for x in parts)
            if value > best_value:
                best, best_value = parts, value
        assert best is not None
        return PairsumReport(n=n, k=k, q=q, argmax=best, value=best_value)

    def _compositions(self, n: int, k: int, q: int) -> Iterable[tuple[int, ...]]:
        if q == 1:
            yield (n,)
            return
        for head in range(k, n - k * (q - 1) + 1):
            for tail in self._compositions(n - head, k, q - 1):
                yield (head,) + tail

    def _check_pairsum(self, n: int, k: int, q: int) -> None:
        if q < 1 or k < 1:
            raise PreconditionError(f"need q >= 1 and k >= 1, got q={q}, k={k}")
        if n < q * k:
            raise PreconditionError(f"n={n} is smaller than q*k={q * k}")
