"""Disjoint sets, for congruence closure over words."""
import collections
import typing as t


T = t.TypeVar("T", bound=t.Hashable)


class DisjointSet(t.Generic[T]):
    """Union by rank with path compression."""

    def __init__(self) -> None:
        self.parent: dict[T, T] = {}
        self.rank: dict[T, int] = {}

    def __len__(self) -> int:
        return len(self.parent)

    def __contains__(self, item: object) -> bool:
        return item in self.parent

    def make_set(self, item: T) -> None:
        if item not in self.parent:
            self.parent[item] = item
            self.rank[item] = 0

    def find(self, item: T) -> T:
        self.make_set(item)
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, first: T, second: T) -> bool:
        """Merge two classes; return False if they were already one."""
        first_root = self.find(first)
        second_root = self.find(second)
        if first_root == second_root:
            return False
        if self.rank[first_root] < self.rank[second_root]:
            first_root, second_root = second_root, first_root
        self.parent[second_root] = first_root
        if self.rank[first_root] == self.rank[second_root]:
            self.rank[first_root] += 1
        return True

    def classes(self) -> list[list[T]]:
        """Members of every class, in insertion order."""
        grouped: dict[T, list[T]] = collections.defaultdict(list)
        for item in self.parent:
            grouped[self.find(item)].append(item)
        return list(grouped.values())
