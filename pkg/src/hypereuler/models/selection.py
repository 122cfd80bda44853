"""Factor selection model."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from hypereuler.models.hypergraph import Hypergraph


@dataclass(frozen=True)
class FactorSelection:
    """Per-edge choice of two incident vertices.

    A valid selection has every vertex chosen an even number of times; it is
    the spanning subgraph of the incidence graph with degree 2 at each e-node
    and even degree at each v-node.
    """

    choice: Mapping[int, tuple[int, int]]

    def __post_init__(self) -> None:
        normalized = {
            edge_id: tuple(sorted(pair)) for edge_id, pair in sorted(self.choice.items())
        }
        object.__setattr__(self, "choice", MappingProxyType(normalized))

    def __hash__(self) -> int:
        return hash(tuple(self.choice.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactorSelection):
            return NotImplemented
        return dict(self.choice) == dict(other.choice)

    def multiplicities(self) -> Counter[int]:
        """Number of edges choosing each vertex."""
        counts: Counter[int] = Counter()
        for pair in self.choice.values():
            counts.update(pair)
        return counts

    def violations(self, hypergraph: Hypergraph) -> list[str]:
        """Describe every invariant this selection breaks against a hypergraph."""
        problems: list[str] = []
        edge_ids = set(hypergraph.edge_ids)
        missing = sorted(edge_ids - set(self.choice))
        if missing:
            problems.append(f"edges without a choice: {missing}")
        extra = sorted(set(self.choice) - edge_ids)
        if extra:
            problems.append(f"choices for unknown edges: {extra}")
        for edge_id, (u, v) in self.choice.items():
            if edge_id not in edge_ids:
                continue
            if u == v:
                problems.append(f"edge {edge_id}: chosen vertices are not distinct")
            elif not {u, v} <= hypergraph.edge(edge_id).members:
                problems.append(f"edge {edge_id}: chosen pair ({u}, {v}) not inside edge")
        odd = sorted(v for v, count in self.multiplicities().items() if count % 2)
        if odd:
            problems.append(f"odd multiplicity at vertices {odd}")
        return problems

    def is_valid_for(self, hypergraph: Hypergraph) -> bool:
        return not self.violations(hypergraph)
