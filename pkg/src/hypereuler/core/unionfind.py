"""Component counting helpers on top of networkx's union-find."""

from typing import Hashable, Iterable

from networkx.utils import UnionFind


def partition(elements: Iterable[Hashable], groups: Iterable[Iterable[Hashable]]) -> list[list]:
    """Partition elements by merging every group into one class.

    Returns:
        Classes as sorted lists, ordered by their smallest element
    """
    forest = UnionFind()
    for element in elements:
        forest[element]
    for group in groups:
        members = list(group)
        if members:
            forest.union(*members)
    classes = [sorted(block) for block in forest.to_sets()]
    classes.sort(key=lambda block: block[0])
    return classes
