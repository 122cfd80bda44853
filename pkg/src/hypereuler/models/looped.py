"""Incidence graph with symbolic loops at every v-node."""

from __future__ import annotations

from dataclasses import dataclass

from hypereuler.core.exceptions import PreconditionError
from hypereuler.models.enums import NodeKind
from hypereuler.models.incidence import IncidenceGraph


@dataclass(frozen=True)
class LoopedIncidenceGraph:
    """Incidence graph plus r loops at each v-node, never materialized.

    Each loop adds 2 to the degree of its v-node. The factor profile is
    f(v) = r at v-nodes and f(e) = 2 at e-nodes.
    """

    base: IncidenceGraph
    r: int

    def __post_init__(self) -> None:
        if self.r < 0:
            raise PreconditionError("loop multiplicity r must be non-negative")

    @classmethod
    def default_r(cls, base: IncidenceGraph) -> int:
        """2(m + n)^2."""
        hypergraph = base.hypergraph
        return 2 * (hypergraph.size + hypergraph.order) ** 2

    @classmethod
    def with_default_loops(cls, base: IncidenceGraph) -> "LoopedIncidenceGraph":
        return cls(base=base, r=cls.default_r(base))

    def degree(self, node: int) -> int:
        """Degree in the looped graph."""
        if self.base.kind(node) is NodeKind.VERTEX:
            return self.base.degree(node) + 2 * self.r
        return self.base.degree(node)

    def f(self, node: int) -> int:
        return self.r if self.base.kind(node) is NodeKind.VERTEX else 2
