"""Maximum-cardinality matching in general graphs.

Graphs are given as neighbour lists indexed by node id and handed to
networkx's blossom implementation. Nodes and edges are inserted in ascending
order, which fixes the matching networkx returns.
"""

from typing import Sequence

import networkx as nx

Adjacency = Sequence[Sequence[int]]


def to_graph(adjacency: Adjacency) -> nx.Graph:
    """Simple undirected graph on nodes 0..n-1, built in ascending order."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(adjacency)))
    graph.add_edges_from((u, v) for u, row in enumerate(adjacency) for v in sorted(row) if u < v)
    return graph


def max_matching(adjacency: Adjacency) -> list[tuple[int, int]]:
    """Compute a maximum-cardinality matching.

    Args:
        adjacency: Neighbour lists indexed by node id (no self-loops)

    Returns:
        Matched pairs (u, v) with u < v, sorted
    """
    matching = nx.max_weight_matching(to_graph(adjacency), maxcardinality=True)
    return sorted((min(u, v), max(u, v)) for u, v in matching)


def is_perfect(matching: Sequence[tuple[int, int]], node_count: int) -> bool:
    return 2 * len(matching) == node_count
