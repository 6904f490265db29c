"""Maximum matching in general graphs by augmenting paths with blossom contraction."""

from __future__ import annotations

import collections
import typing

import structlog

from clawfree.graph.models import Matching
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from clawfree.graph.models import Graph

__all__ = ("max_matching",)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()

_NONE = -1


class _AugmentingSearch:
    """Edmonds' search for augmenting paths over a mutable mate array."""

    def __init__(self, g: Graph) -> None:
        self.n = g.vertex_count
        self.nbrs: list[list[int]] = [bits.members(a) for a in g.adjacency]
        self.mate: list[int] = [_NONE] * self.n
        self.parent: list[int] = []
        self.base: list[int] = []
        self.used: list[bool] = []
        self.blossom: list[bool] = []

    def greedy(self) -> None:
        """Match free vertices to free neighbours in index order."""
        for v in range(self.n):
            if self.mate[v] != _NONE:
                continue

            for u in self.nbrs[v]:
                if self.mate[u] == _NONE:
                    self.mate[u], self.mate[v] = v, u
                    break

    def augment_from(self, root: int) -> bool:
        """Search for an augmenting path from an exposed root and flip it if found."""
        end = self._find_path(root)

        if end == _NONE:
            return False

        v = end

        while v != _NONE:
            pv = self.parent[v]
            ppv = self.mate[pv]
            self.mate[v], self.mate[pv] = pv, v
            v = ppv

        return True

    def _lca(self, a: int, b: int) -> int:
        seen = [False] * self.n

        while True:
            a = self.base[a]
            seen[a] = True

            if self.mate[a] == _NONE:
                break

            a = self.parent[self.mate[a]]

        while True:
            b = self.base[b]

            if seen[b]:
                return b

            b = self.parent[self.mate[b]]

    def _mark_path(self, v: int, b: int, child: int) -> None:
        while self.base[v] != b:
            self.blossom[self.base[v]] = self.blossom[self.base[self.mate[v]]] = True
            self.parent[v] = child
            child = self.mate[v]
            v = self.parent[self.mate[v]]

    def _find_path(self, root: int) -> int:
        n = self.n
        self.used = [False] * n
        self.parent = [_NONE] * n
        self.base = list(range(n))
        self.used[root] = True
        queue = collections.deque([root])

        while queue:
            v = queue.popleft()

            for to in self.nbrs[v]:
                if self.base[v] == self.base[to] or self.mate[v] == to:
                    continue

                if to == root or (
                    self.mate[to] != _NONE and self.parent[self.mate[to]] != _NONE
                ):
                    # odd cycle: contract the blossom onto its base
                    cur_base = self._lca(v, to)
                    self.blossom = [False] * n
                    self._mark_path(v, cur_base, to)
                    self._mark_path(to, cur_base, v)

                    for i in range(n):
                        if self.blossom[self.base[i]]:
                            self.base[i] = cur_base

                            if not self.used[i]:
                                self.used[i] = True
                                queue.append(i)

                elif self.parent[to] == _NONE:
                    self.parent[to] = v

                    if self.mate[to] == _NONE:
                        return to

                    self.used[self.mate[to]] = True
                    queue.append(self.mate[to])

        return _NONE


def max_matching(g: Graph) -> Matching:
    """Find a maximum matching of 'g'.

    A greedy matching is grown by one augmenting path search per exposed vertex, which is enough
    because a vertex left exposed after its own search stays exposed for good.

    Parameters
    ----------
    g : Graph
        Any simple graph.

    Returns
    -------
    Matching
        A matching of maximum size; its size is the matching number of 'g'.

    """
    search = _AugmentingSearch(g)
    search.greedy()
    greedy_size = sum(1 for v, u in enumerate(search.mate) if u > v)

    for root in range(g.vertex_count):
        if search.mate[root] == _NONE and search.nbrs[root]:
            search.augment_from(root)

    matching = Matching(tuple((v, u) for v, u in enumerate(search.mate) if u > v))
    _log.debug("Computed maximum matching.", size=matching.size, greedy_size=greedy_size)

    return matching
