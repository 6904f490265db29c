"""Exact clique and stability numbers by branch and bound."""

from __future__ import annotations

import typing

from clawfree.core.exceptions import InternalError
from clawfree.graph.operations import complement, is_clique, is_stable
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from clawfree.graph.models import Graph
    from clawfree.util.typing import Bitset

__all__ = (
    "Certificate",
    "clique_number",
    "stability_number",
)


class Certificate(typing.NamedTuple):
    """An exact value together with a vertex set that attains it."""

    #: The clique or stability number.
    value: int

    #: A clique (or stable set) of that size, sorted.
    vertices: tuple[int, ...]


class _MaxClique:
    """Branch and bound over candidate sets, bounded by a greedy coloring of the candidates."""

    def __init__(self, adj: tuple[Bitset, ...]) -> None:
        self.adj = adj
        self.best: Bitset = 0
        self.best_size = 0

    def _color_sort(self, candidates: Bitset) -> list[tuple[int, int]]:
        """Greedily color the candidates; return (vertex, color) pairs by nondecreasing color."""
        order: list[tuple[int, int]] = []
        uncolored = candidates
        color = 0

        while uncolored:
            color += 1
            available = uncolored

            while available:
                v = bits.first(available)
                available &= ~self.adj[v] & ~(1 << v)
                uncolored &= ~(1 << v)
                order.append((v, color))

        return order

    def expand(self, clique: Bitset, size: int, candidates: Bitset) -> None:
        for v, bound in reversed(self._color_sort(candidates)):
            if size + bound <= self.best_size:
                return

            grown = clique | (1 << v)
            remaining = candidates & self.adj[v]

            if remaining:
                self.expand(grown, size + 1, remaining)
            elif size + 1 > self.best_size:
                self.best, self.best_size = grown, size + 1

            candidates &= ~(1 << v)


def clique_number(g: Graph, within: Bitset | None = None) -> Certificate:
    """Compute the clique number with a largest clique as certificate.

    Parameters
    ----------
    g : Graph
        The graph.
    within : Bitset | None, optional
        Restrict to the subgraph induced by these vertices.

    Returns
    -------
    Certificate
        The clique number and a clique of that size.

    Raises
    ------
    InternalError
        Raised if the certificate is not a clique.

    """
    search = _MaxClique(g.adjacency)
    search.expand(0, 0, g.full_mask if within is None else within)

    if not is_clique(g, search.best):
        raise InternalError(f"clique certificate {bits.members(search.best)} is not a clique")

    return Certificate(search.best_size, tuple(bits.members(search.best)))


def stability_number(g: Graph) -> Certificate:
    """Compute the stability number with a largest stable set as certificate.

    Raises
    ------
    InternalError
        Raised if the certificate is not a stable set.

    """
    value, vertices = clique_number(complement(g))

    if not is_stable(g, vertices):
        raise InternalError(f"stable set certificate {list(vertices)} has an edge")

    return Certificate(value, vertices)
