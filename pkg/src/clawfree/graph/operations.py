"""Elementary graph constructions and predicates."""

from __future__ import annotations

import typing

from clawfree.core.exceptions import InputError
from clawfree.graph.enum import Adjacency
from clawfree.graph.models import Graph
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from collections.abc import Iterable

    from clawfree.util.typing import Bitset, Edge

__all__ = (
    "complement",
    "components",
    "induced_subgraph",
    "is_clique",
    "is_connected",
    "is_stable",
    "join_cojoin",
    "line_graph",
    "reachable",
)


def _as_mask(g: Graph, vs: Iterable[int] | Bitset) -> Bitset:
    """Convert a vertex iterable or bitset to a bitset of vertices of 'g'.

    Raises
    ------
    InputError
        Raised if a vertex is out of range.

    """
    if isinstance(vs, int):
        mask = vs
    else:
        vs = list(vs)

        if any(v < 0 for v in vs):
            raise InputError(f"negative vertex in {sorted(vs)}")

        mask = bits.pack(vs)

    if mask < 0 or mask & ~g.full_mask:
        raise InputError(
            f"vertex set {bits.members(mask & ~g.full_mask)} is outside 0..{g.vertex_count - 1}",
        )

    return mask


def complement(g: Graph) -> Graph:
    """Get the graph on the same vertices whose edges are exactly the non-edges of 'g'."""
    full = g.full_mask
    return Graph.from_adjacency(
        [full & ~a & ~(1 << v) for v, a in enumerate(g.adjacency)],
        labels=g.labels,
        origin=g.origin,
    )


def induced_subgraph(g: Graph, vs: Iterable[int] | Bitset) -> Graph:
    """Get the subgraph induced by a vertex set.

    The vertices of the result are the members of 'vs' in increasing order, renumbered from 0.
    The 'origin' of the result maps each of them back to the vertex of 'g' it came from, following
    the origin of 'g' itself so repeated restriction keeps pointing at the first graph.

    Parameters
    ----------
    g : Graph
        The host graph.
    vs : Iterable[int] | Bitset
        The vertices to keep.

    Returns
    -------
    Graph
        The induced subgraph.

    Raises
    ------
    InputError
        Raised if a vertex is out of range.

    """
    keep = bits.members(_as_mask(g, vs))
    index = {v: i for i, v in enumerate(keep)}
    adjacency = [
        bits.pack(index[u] for u in bits.iter_bits(g.neighbors(v)) if u in index) for v in keep
    ]
    labels = [g.labels[v] for v in keep] if g.labels is not None else None

    return Graph.from_adjacency(adjacency, labels=labels, origin=[g.origin[v] for v in keep])


def join_cojoin(g: Graph, xs: Iterable[int] | Bitset, ys: Iterable[int] | Bitset) -> Adjacency:
    """Decide whether two disjoint vertex sets are joined, cojoined or neither.

    An empty side makes both relations hold vacuously; that case reports 'Adjacency.COJOIN'.

    Raises
    ------
    InputError
        Raised if the sets overlap or name vertices outside the graph.

    """
    x_mask, y_mask = _as_mask(g, xs), _as_mask(g, ys)

    if x_mask & y_mask:
        raise InputError(f"vertex sets overlap on {bits.members(x_mask & y_mask)}")

    if not x_mask or not y_mask:
        return Adjacency.COJOIN

    joined = all(g.neighbors(x) & y_mask == y_mask for x in bits.iter_bits(x_mask))

    if joined:
        return Adjacency.JOIN

    if not any(g.neighbors(x) & y_mask for x in bits.iter_bits(x_mask)):
        return Adjacency.COJOIN

    return Adjacency.MIXED


def line_graph(g: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    """Get the line graph of 'g' and the edge of 'g' each of its vertices stands for.

    Vertices of the line graph follow the lexicographic order of the edges of 'g'.
    """
    edges = tuple(g.edges())
    incident: list[Bitset] = [0] * g.vertex_count

    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i

    adjacency = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    labels = [f"{g.label(u)}-{g.label(v)}" for u, v in edges]

    return Graph.from_adjacency(adjacency, labels=labels), edges


def reachable(g: Graph, start: int, within: Bitset | None = None) -> Bitset:
    """Get the vertices reachable from 'start' through vertices of 'within'.

    'start' itself is always included.
    """
    allowed = g.full_mask if within is None else within
    seen = frontier = 1 << start

    while frontier:
        nxt = 0

        for v in bits.iter_bits(frontier):
            nxt |= g.neighbors(v)

        frontier = nxt & allowed & ~seen
        seen |= frontier

    return seen


def components(g: Graph, within: Bitset | None = None) -> list[Bitset]:
    """Get the connected components of the subgraph induced by 'within'.

    Components are ordered by their smallest vertex.
    """
    remaining = g.full_mask if within is None else within
    found: list[Bitset] = []

    while remaining:
        comp = reachable(g, bits.first(remaining), remaining)
        found.append(comp)
        remaining &= ~comp

    return found


def is_connected(g: Graph, within: Bitset | None = None) -> bool:
    """Check whether the subgraph induced by 'within' is connected.

    The empty graph counts as connected.
    """
    return len(components(g, within)) <= 1


def is_clique(g: Graph, vs: Iterable[int] | Bitset) -> bool:
    """Check whether the vertices are pairwise adjacent."""
    mask = _as_mask(g, vs)
    return all(mask & ~(1 << v) & ~g.neighbors(v) == 0 for v in bits.iter_bits(mask))


def is_stable(g: Graph, vs: Iterable[int] | Bitset) -> bool:
    """Check whether the vertices are pairwise nonadjacent."""
    mask = _as_mask(g, vs)
    return not any(g.neighbors(v) & mask for v in bits.iter_bits(mask))
