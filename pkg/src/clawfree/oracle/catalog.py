"""Small named graphs used as fixtures and as oracle patterns.

Edge lists here are written out by hand instead of derived from the recognition patterns, so tests
that compare the two catch a mistake in either.
"""

from __future__ import annotations

import itertools
import types
import typing

from clawfree.core.exceptions import InputError
from clawfree.graph.models import Graph

if typing.TYPE_CHECKING:
    from collections.abc import Mapping

__all__ = (
    "FOUR_VERTEX_GRAPHS",
    "NON_LINE_GRAPHS",
    "co_petersen",
    "complete",
    "cycle",
    "empty",
    "named",
    "path",
    "petersen",
    "star",
)


def complete(n: int) -> Graph:
    """Get the complete graph on 'n' vertices."""
    return Graph(n, itertools.combinations(range(n), 2))


def empty(n: int) -> Graph:
    """Get 'n' pairwise nonadjacent vertices."""
    return Graph(n)


def cycle(n: int) -> Graph:
    """Get the cycle ``0-1-...-(n-1)-0``.

    Raises
    ------
    InputError
        Raised if 'n' is below three.

    """
    if n < 3:  # noqa: PLR2004
        raise InputError(f"a cycle needs at least three vertices; got {n}")

    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Get the path ``0-1-...-(n-1)``."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """Get a center, vertex 0, adjacent to 'leaves' pairwise nonadjacent vertices."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    """Get the Petersen graph: outer cycle ``0..4``, spokes ``i-(i+5)`` and an inner pentagram."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]

    return Graph(10, outer + spokes + inner)


def co_petersen() -> Graph:
    """Get the complement of the Petersen graph.

    Vertices ``0..4`` form the 5-hole ``0-2-4-1-3``; inner vertex ``5+i`` sees every hole vertex
    but 'i' and its inner neighbours ``5+(i±1)``. Its clique number is 4 and it needs 5 colors.
    """
    outer = [(i, (i + 2) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    cross = [(j, 5 + i) for i in range(5) for j in range(5) if j != i]

    return Graph(10, outer + inner + cross)


def _graph(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


#: All eleven graphs on four vertices, by name.
FOUR_VERTEX_GRAPHS: Mapping[str, Graph] = types.MappingProxyType(
    {
        "P4": _graph(4, [(0, 1), (1, 2), (2, 3)]),
        "K4": _graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        "diamond": _graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
        "C4": _graph(4, [(0, 1), (0, 3), (1, 2), (2, 3)]),
        "paw": _graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)]),
        "claw": _graph(4, [(0, 1), (1, 2), (1, 3)]),
        "4K1": _graph(4, []),
        "co-diamond": _graph(4, [(2, 3)]),
        "2K2": _graph(4, [(0, 1), (2, 3)]),
        "co-paw": _graph(4, [(0, 1), (1, 2)]),
        "co-claw": _graph(4, [(0, 1), (0, 2), (1, 2)]),
    },
)

#: The nine minimal graphs that are not line graphs, by name.
NON_LINE_GRAPHS: Mapping[str, Graph] = types.MappingProxyType(
    {
        "claw": _graph(4, [(0, 1), (0, 2), (0, 3)]),
        "P5-twin": _graph(6, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 4), (2, 5)]),
        "co-R": _graph(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (3, 4), (2, 5)],
        ),
        "C4-twin": _graph(5, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 4), (2, 4)]),
        "C5-twin": _graph(6, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 4), (2, 5), (4, 5)]),
        "bridge": _graph(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]
            + [(v, 4) for v in (0, 1, 3)]
            + [(v, 5) for v in (0, 2, 3)],
        ),
        "5-wheel": _graph(
            6,
            [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)],
        ),
        "co-A": _graph(
            6,
            [(0, 1), (0, 3), (1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 4), (4, 5)],
        ),
        "K5-e": _graph(5, [pair for pair in itertools.combinations(range(5), 2) if pair != (3, 4)]),
    },
)

_FAMILIES = {
    "complete": complete,
    "empty": empty,
    "cycle": cycle,
    "path": path,
    "star": star,
}


def named(name: str) -> Graph:
    """Look up a graph by name.

    Accepted names are ``petersen``, ``co-petersen``, the keys of 'FOUR_VERTEX_GRAPHS' and
    'NON_LINE_GRAPHS', and a family name with a size such as ``cycle-5``, ``complete-6`` or
    ``star-3``.

    Raises
    ------
    InputError
        Raised if the name is unknown.

    """
    if name == "petersen":
        return petersen()

    if name == "co-petersen":
        return co_petersen()

    if name in FOUR_VERTEX_GRAPHS:
        return FOUR_VERTEX_GRAPHS[name]

    if name in NON_LINE_GRAPHS:
        return NON_LINE_GRAPHS[name]

    family, _, size = name.rpartition("-")

    if family in _FAMILIES and size.isdigit():
        return _FAMILIES[family](int(size))

    raise InputError(f"unknown graph name {name!r}")
