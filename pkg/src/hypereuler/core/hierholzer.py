"""Closed-trail decomposition of even multigraphs (Hierholzer)."""

from collections import defaultdict
from typing import Sequence

Link = tuple[int, int, int]


def closed_trails(links: Sequence[Link]) -> list[tuple[list[int], list[int]]]:
    """Decompose an even multigraph into one closed trail per component.

    Args:
        links: ``(link_id, u, v)`` triples with u != v; every vertex must have
            even degree

    Returns:
        ``(anchors, link_ids)`` per non-trivial component, where anchors
        start and end at the component's smallest vertex. At every vertex the
        lowest unused link id is taken first.

    Raises:
        ValueError: If some vertex has odd degree or a link is a loop
    """
    adjacency: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for link_id, u, v in links:
        if u == v:
            raise ValueError(f"link {link_id} is a loop at {u}")
        adjacency[u].append((link_id, v))
        adjacency[v].append((link_id, u))
    odd = sorted(v for v, incident in adjacency.items() if len(incident) % 2)
    if odd:
        raise ValueError(f"odd degree at {odd}")
    for incident in adjacency.values():
        incident.sort()

    pointer = {v: 0 for v in adjacency}
    used: set[int] = set()
    trails: list[tuple[list[int], list[int]]] = []

    def next_unused(v: int) -> tuple[int, int] | None:
        incident = adjacency[v]
        i = pointer[v]
        while i < len(incident) and incident[i][0] in used:
            i += 1
        pointer[v] = i
        return incident[i] if i < len(incident) else None

    for start in sorted(adjacency):
        if next_unused(start) is None:
            continue
        stack: list[tuple[int, int]] = [(start, -1)]
        circuit: list[tuple[int, int]] = []
        while stack:
            v, _ = stack[-1]
            step = next_unused(v)
            if step is None:
                circuit.append(stack.pop())
            else:
                link_id, w = step
                used.add(link_id)
                stack.append((w, link_id))
        circuit.reverse()
        anchors = [v for v, _ in circuit]
        link_ids = [link_id for _, link_id in circuit[1:]]
        trails.append((anchors, link_ids))

    return trails
