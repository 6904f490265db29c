"""Induced cycles and the perfectness test for class members."""

from __future__ import annotations

import typing

from clawfree.core.exceptions import PreconditionError
from clawfree.graph.operations import is_connected
from clawfree.recognition.cliques import stability_number
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from clawfree.graph.models import Graph
    from clawfree.util.typing import Bitset

__all__ = (
    "find_hole",
    "is_perfect_in_class",
)

#: The shortest cycle that counts as a hole.
MIN_HOLE_LENGTH = 4


def _above(v: int) -> Bitset:
    """Get the mask of all indices greater than 'v'."""
    return ~((1 << (v + 1)) - 1)


def find_hole(g: Graph, length: int, within: Bitset | None = None) -> tuple[int, ...] | None:
    """Find an induced cycle of the given length.

    The cycle is reported in cyclic order, starting at its smallest vertex and continuing towards
    the smaller of that vertex's two cycle neighbours. Among all such cycles the lexicographically
    least one is returned, so the result is reproducible.

    Parameters
    ----------
    g : Graph
        The graph to search.
    length : int
        The number of vertices of the hole; at least 4.
    within : Bitset | None, optional
        Restrict the search to the subgraph induced by these vertices.

    Returns
    -------
    tuple[int, ...] | None
        The vertices of the hole, or None if there is none.

    Raises
    ------
    PreconditionError
        Raised if 'length' is below 4.

    """
    if length < MIN_HOLE_LENGTH:
        raise PreconditionError(f"holes have at least {MIN_HOLE_LENGTH} vertices; got {length}")

    allowed = g.full_mask if within is None else within
    adj = g.adjacency
    last_position = length - 1

    def extend(
        path: list[int],
        used: Bitset,
        blocked: Bitset,
        pool: Bitset,
    ) -> tuple[int, ...] | None:
        # 'blocked' holds the neighbours of the interior path vertices path[1:-1]
        start, tail = path[0], path[-1]
        position = len(path)
        candidates = adj[tail] & pool & ~used & ~blocked

        if position == last_position:
            candidates &= adj[start] & _above(path[1])
        elif position > 1:
            candidates &= ~adj[start]

        for x in bits.iter_bits(candidates):
            if position == last_position:
                return (*path, x)

            path.append(x)
            interior = blocked | adj[tail] if position > 1 else blocked
            found = extend(path, used | (1 << x), interior, pool)
            path.pop()

            if found:
                return found

        return None

    for start in bits.iter_bits(allowed):
        pool = allowed & _above(start)

        if (adj[start] & pool).bit_count() < 2:  # noqa: PLR2004
            continue

        if found := extend([start], 1 << start, 0, pool):
            return found

    return None


def is_perfect_in_class(g: Graph, *, assume_valid: bool = False) -> bool:
    """Decide perfectness of a connected class member with a stable set of size three.

    Inside the class no hole has more than seven vertices and every odd antihole forces a 5-hole,
    so the graph is perfect exactly when it has neither a 5-hole nor a 7-hole.

    Parameters
    ----------
    g : Graph
        A connected member of the class with stability number at least three.
    assume_valid : bool, optional
        Skip the precondition checks when the caller has already established them.

    Returns
    -------
    bool
        Whether 'g' is perfect.

    Raises
    ------
    PreconditionError
        Raised if 'g' is disconnected, not in the class, or has stability number below three.

    """
    if not assume_valid:
        from clawfree.recognition.patterns import find_class_violation  # noqa: PLC0415

        if not is_connected(g):
            raise PreconditionError("perfectness test needs a connected graph")

        if witness := find_class_violation(g):
            raise PreconditionError(f"perfectness test needs a class member; found {witness}")

        if stability_number(g).value < 3:  # noqa: PLR2004
            raise PreconditionError("perfectness test needs a stable set of size three")

    return find_hole(g, 5) is None and find_hole(g, 7) is None
