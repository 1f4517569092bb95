"""Disjoint-set forest with path halving and union by size."""

from __future__ import annotations

from typing import Hashable


class UnionFind:
    """
    >>> uf = UnionFind()
    >>> uf.union(1, 2)
    True
    >>> uf.union(2, 1)
    False
    >>> uf.find(2) == uf.find(1)
    True
    >>> uf.n_sets
    1
    """

    def __init__(self, items=()):
        self.parent: dict[Hashable, Hashable] = {}
        self.size: dict[Hashable, int] = {}
        self.n_sets = 0
        for x in items:
            self.find(x)

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            self.size[x] = 1
            self.n_sets += 1
            return x
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y) -> bool:
        """Merge the sets of ``x`` and ``y``; False if already merged."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.n_sets -= 1
        return True
