"""Detection of the six forbidden induced subgraphs and the class membership test.

Every pattern has a fixed vertex order, and a witness lists the host vertices in that order:

===========  =============================  ===================================================
kind         witness order                  shape
===========  =============================  ===================================================
claw         center, three leaves           a vertex with three pairwise nonadjacent neighbours
four_K1      four vertices                  four pairwise nonadjacent vertices
K5_minus_e   a, b, then a triangle          five vertices, all adjacent except a and b
five_wheel   hub, then a 5-hole in order    a 5-hole and a vertex adjacent to all of it
C5_twin      a, t, b, c, d, e               5-hole a-b-c-d-e, t adjacent to exactly e, a, b
P5_twin      a, t, b, e, p, q               induced path p-b-a-e-q, t adjacent to a, b and e
===========  =============================  ===================================================
"""

from __future__ import annotations

import dataclasses
import itertools
import types
import typing

from clawfree.core.exceptions import InternalError
from clawfree.graph.models import Graph
from clawfree.recognition.enum import ForbiddenKind
from clawfree.recognition.holes import find_hole
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Mapping
    from typing import Any

    from clawfree.util.typing import Bitset

__all__ = (
    "PATTERNS",
    "Witness",
    "find_class_violation",
    "find_forbidden",
    "in_class",
)

_CYCLE5 = ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))

#: The pattern graphs, with vertices numbered in witness order.
PATTERNS: Mapping[ForbiddenKind, Graph] = types.MappingProxyType(
    {
        ForbiddenKind.CLAW: Graph(4, [(0, 1), (0, 2), (0, 3)]),
        ForbiddenKind.FOUR_K1: Graph(4),
        ForbiddenKind.K5_MINUS_E: Graph(
            5,
            [pair for pair in itertools.combinations(range(5), 2) if pair != (0, 1)],
        ),
        ForbiddenKind.FIVE_WHEEL: Graph(
            6,
            [(0, i) for i in range(1, 6)] + [(u + 1, v + 1) for u, v in _CYCLE5],
        ),
        ForbiddenKind.C5_TWIN: Graph(
            6,
            [(0, 1), (0, 2), (0, 5), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)],
        ),
        ForbiddenKind.P5_TWIN: Graph(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)],
        ),
    },
)


@dataclasses.dataclass(frozen=True, slots=True)
class Witness:
    """Host vertices inducing one of the forbidden patterns, listed in the pattern's order."""

    kind: ForbiddenKind
    vertices: tuple[int, ...]

    def matches(self, g: Graph) -> bool:
        """Check that the vertices induce exactly the pattern in 'g' under the listed order."""
        pattern = PATTERNS[self.kind]

        if len(self.vertices) != pattern.vertex_count or len(set(self.vertices)) != len(
            self.vertices,
        ):
            return False

        return all(
            g.has_edge(self.vertices[i], self.vertices[j]) == pattern.has_edge(i, j)
            for i, j in itertools.combinations(range(pattern.vertex_count), 2)
        )

    def to_dict(self) -> dict[str, Any]:
        """Get a JSON-compatible form of the witness."""
        return {"kind": str(self.kind), "vertices": list(self.vertices)}

    def __str__(self) -> str:
        """Describe the witness."""
        return f"{self.kind} on {list(self.vertices)}"


def _claws(adj: tuple[Bitset, ...]) -> Iterator[tuple[int, ...]]:
    for center, nbrs in enumerate(adj):
        for a in bits.iter_bits(nbrs):
            pool_b = nbrs & ~adj[a] & ~((1 << (a + 1)) - 1)

            for b in bits.iter_bits(pool_b):
                pool_c = pool_b & ~adj[b] & ~((1 << (b + 1)) - 1)

                for c in bits.iter_bits(pool_c):
                    yield (center, a, b, c)


def _stable_quadruples(adj: tuple[Bitset, ...]) -> Iterator[tuple[int, ...]]:
    full = (1 << len(adj)) - 1

    for a in range(len(adj)):
        pool_b = full & ~adj[a] & ~((1 << (a + 1)) - 1)

        for b in bits.iter_bits(pool_b):
            pool_c = pool_b & ~adj[b] & ~((1 << (b + 1)) - 1)

            for c in bits.iter_bits(pool_c):
                pool_d = pool_c & ~adj[c] & ~((1 << (c + 1)) - 1)

                for d in bits.iter_bits(pool_d):
                    yield (a, b, c, d)


def _near_cliques(adj: tuple[Bitset, ...]) -> Iterator[tuple[int, ...]]:
    full = (1 << len(adj)) - 1

    for a in range(len(adj)):
        for b in bits.iter_bits(full & ~adj[a] & ~((1 << (a + 1)) - 1)):
            common = adj[a] & adj[b]

            for c in bits.iter_bits(common):
                pool_d = common & adj[c] & ~((1 << (c + 1)) - 1)

                for d in bits.iter_bits(pool_d):
                    for e in bits.iter_bits(pool_d & adj[d] & ~((1 << (d + 1)) - 1)):
                        yield (a, b, c, d, e)


def _wheels(g: Graph) -> Iterator[tuple[int, ...]]:
    for hub in g.vertices:
        if hole := find_hole(g, 5, within=g.neighbors(hub)):
            yield (hub, *hole)


def _twin_pairs(adj: tuple[Bitset, ...]) -> Iterator[tuple[int, int, int, int]]:
    """Yield adjacent ``a, t`` with two nonadjacent common neighbours ``b, e``."""
    for a, nbrs in enumerate(adj):
        for t in bits.iter_bits(nbrs):
            common = nbrs & adj[t]

            for b in bits.iter_bits(common):
                for e in bits.iter_bits(common & ~adj[b] & ~(1 << b)):
                    yield a, t, b, e


def _c5_twins(adj: tuple[Bitset, ...]) -> Iterator[tuple[int, ...]]:
    for a, t, b, e in _twin_pairs(adj):
        chosen = bits.pack((a, t, b, e))
        pool_c = adj[b] & ~adj[a] & ~adj[t] & ~adj[e] & ~chosen

        for c in bits.iter_bits(pool_c):
            pool_d = adj[c] & adj[e] & ~adj[a] & ~adj[t] & ~adj[b] & ~chosen & ~(1 << c)

            for d in bits.iter_bits(pool_d):
                yield (a, t, b, c, d, e)


def _p5_twins(adj: tuple[Bitset, ...]) -> Iterator[tuple[int, ...]]:
    for a, t, b, e in _twin_pairs(adj):
        chosen = bits.pack((a, t, b, e))
        pool_p = adj[b] & ~adj[a] & ~adj[t] & ~adj[e] & ~chosen

        for p in bits.iter_bits(pool_p):
            pool_q = adj[e] & ~adj[a] & ~adj[t] & ~adj[b] & ~adj[p] & ~chosen & ~(1 << p)

            for q in bits.iter_bits(pool_q):
                yield (a, t, b, e, p, q)


_SEARCHES: dict[ForbiddenKind, Callable[[Graph], Iterator[tuple[int, ...]]]] = {
    ForbiddenKind.CLAW: lambda g: _claws(g.adjacency),
    ForbiddenKind.FOUR_K1: lambda g: _stable_quadruples(g.adjacency),
    ForbiddenKind.K5_MINUS_E: lambda g: _near_cliques(g.adjacency),
    ForbiddenKind.FIVE_WHEEL: _wheels,
    ForbiddenKind.C5_TWIN: lambda g: _c5_twins(g.adjacency),
    ForbiddenKind.P5_TWIN: lambda g: _p5_twins(g.adjacency),
}


def find_forbidden(g: Graph, kind: ForbiddenKind | str) -> Witness | None:
    """Find an induced copy of one forbidden pattern.

    The search is deterministic: candidate vertices are tried in increasing order, so the same graph
    always yields the same witness.

    Parameters
    ----------
    g : Graph
        The graph to search.
    kind : ForbiddenKind | str
        The pattern to look for.

    Returns
    -------
    Witness | None
        The vertices of an induced copy in pattern order, or None.

    Raises
    ------
    InternalError
        Raised if the reported vertices do not induce the pattern.

    """
    kind = ForbiddenKind(kind)
    found = next(_SEARCHES[kind](g), None)

    if found is None:
        return None

    witness = Witness(kind, found)

    if not witness.matches(g):
        raise InternalError(f"{witness} does not induce the pattern")

    return witness


def find_class_violation(g: Graph) -> Witness | None:
    """Get a witness for the first forbidden kind that 'g' contains, or None for class members."""
    for kind in ForbiddenKind:
        if witness := find_forbidden(g, kind):
            return witness

    return None


def in_class(g: Graph) -> bool:
    """Check whether 'g' contains none of the six forbidden induced subgraphs.

    Use 'find_class_violation' to get a witness when the answer is False.
    """
    return find_class_violation(g) is None
