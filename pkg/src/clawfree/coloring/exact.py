"""Exact vertex coloring by DSATUR branch and bound."""

from __future__ import annotations

import typing

import structlog

from clawfree.coloring.constants import DEFAULT_NODE_BUDGET
from clawfree.core.exceptions import BudgetExceededError
from clawfree.graph.models import Coloring
from clawfree.recognition.cliques import clique_number
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from clawfree.graph.models import Graph
    from clawfree.util.typing import Bitset

__all__ = ("exact_color",)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()


class _Dsatur:
    """Branch and bound over partial colorings.

    The next vertex is the uncolored one with the most distinct neighbour colors, then the most
    uncolored neighbours, then the smallest index. It tries every color already in use and one new
    color, as long as the total stays below the best coloring found so far.
    """

    def __init__(self, g: Graph, budget: int, lower: int) -> None:
        self.adj = g.adjacency
        self.budget = budget
        self.lower = lower
        self.nodes = 0
        self.colors: list[int] = [-1] * g.vertex_count

        #: ``seen[v]`` has bit 'c' set when a colored neighbour of 'v' has color 'c'.
        self.seen: list[int] = [0] * g.vertex_count

        self.best: list[int] = []
        self.best_count = g.vertex_count + 1

    def pick(self, uncolored: Bitset) -> int:
        return max(
            bits.iter_bits(uncolored),
            key=lambda v: (self.seen[v].bit_count(), (self.adj[v] & uncolored).bit_count(), -v),
        )

    def assign(self, v: int, c: int, uncolored: Bitset) -> list[int]:
        """Color 'v' and return the neighbours that saw 'c' for the first time."""
        self.colors[v] = c
        flag = 1 << c
        changed = [u for u in bits.iter_bits(self.adj[v] & uncolored) if not self.seen[u] & flag]

        for u in changed:
            self.seen[u] |= flag

        return changed

    def unassign(self, v: int, c: int, changed: list[int]) -> None:
        self.colors[v] = -1

        for u in changed:
            self.seen[u] &= ~(1 << c)

    def greedy(self, uncolored: Bitset) -> None:
        """Finish the current partial coloring greedily and record it as the first incumbent."""
        used = max(self.colors, default=-1) + 1
        trail: list[tuple[int, int, list[int]]] = []

        while uncolored:
            v = self.pick(uncolored)
            uncolored &= ~(1 << v)
            c = next(c for c in range(used + 1) if not self.seen[v] >> c & 1)
            trail.append((v, c, self.assign(v, c, uncolored)))
            used = max(used, c + 1)

        self.best, self.best_count = self.colors.copy(), used

        for v, c, changed in reversed(trail):
            self.unassign(v, c, changed)

    def search(self, uncolored: Bitset, used: int) -> None:
        if not uncolored:
            self.best, self.best_count = self.colors.copy(), used
            return

        self.nodes += 1

        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"exact coloring gave up after {self.budget} search nodes",
                self.budget,
            )

        v = self.pick(uncolored)
        rest = uncolored & ~(1 << v)

        for c in range(min(used + 1, self.best_count - 1)):
            if self.seen[v] >> c & 1:
                continue

            changed = self.assign(v, c, rest)
            self.search(rest, max(used, c + 1))
            self.unassign(v, c, changed)

            if self.best_count <= self.lower:
                return


def exact_color(g: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> Coloring:
    """Find a coloring with the fewest possible colors.

    A largest clique is colored first, which fixes the color symmetry and gives the lower bound
    the search stops at.

    Parameters
    ----------
    g : Graph
        Any graph.
    node_budget : int, optional
        The number of search nodes to expand before giving up.

    Returns
    -------
    Coloring
        An optimal proper coloring.

    Raises
    ------
    BudgetExceededError
        Raised if the budget runs out before optimality is proven. No partial answer is returned.

    """
    if g.vertex_count == 0:
        return Coloring(())

    omega, clique = clique_number(g)
    search = _Dsatur(g, node_budget, omega)
    uncolored = g.full_mask

    for c, v in enumerate(clique):
        uncolored &= ~(1 << v)
        search.assign(v, c, uncolored)

    search.greedy(uncolored)

    if search.best_count > omega:
        try:
            search.search(uncolored, omega)
        except BudgetExceededError:
            _log.warning(
                "Exact coloring ran out of budget.",
                budget=node_budget,
                lower=omega,
                incumbent=search.best_count,
            )
            raise

    _log.debug("Exact coloring finished.", colors=search.best_count, nodes=search.nodes)

    coloring = Coloring(tuple(search.best))
    coloring.verify(g)

    return coloring
