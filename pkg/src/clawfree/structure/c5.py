"""Classification of the vertices outside a 5-hole into the X, Y and R sets.

Positions on the hole are taken modulo 5. A vertex outside the hole is

* in ``X[i]`` when its hole neighbours are exactly ``i, i+1``,
* in ``Y[i]`` when they are exactly ``i, i+1, i+2, i+3``,
* in ``R`` when it has none.

Class members have no other kind of vertex.
"""

from __future__ import annotations

import collections
import dataclasses
import itertools
import typing

from clawfree.core.exceptions import PreconditionError, StructureViolationError
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from collections.abc import Sequence
    from typing import Any

    from clawfree.graph.models import Graph
    from clawfree.util.typing import Bitset

__all__ = (
    "C5Structure",
    "check_hole",
    "classify_c5",
    "cyclic_run",
    "hole_positions",
    "k_vertex_profile",
)

_LENGTH = 5


def check_hole(g: Graph, hole: Sequence[int]) -> tuple[int, ...]:
    """Check that the vertices form an induced cycle of 'g' in the listed order.

    Raises
    ------
    PreconditionError
        Raised if a vertex repeats, is out of range, or the cycle has a missing edge or a chord.

    """
    hole = tuple(hole)
    k = len(hole)

    if len(set(hole)) != k or any(not 0 <= v < g.vertex_count for v in hole):
        raise PreconditionError(f"{list(hole)} is not a list of distinct vertices of the graph")

    for a, b in itertools.combinations(range(k), 2):
        consecutive = (b - a) % k in (1, k - 1)

        if g.has_edge(hole[a], hole[b]) != consecutive:
            raise PreconditionError(f"{list(hole)} is not an induced cycle in this order")

    return hole


def hole_positions(g: Graph, hole: Sequence[int], v: int) -> tuple[int, ...]:
    """Get the positions on the hole of the neighbours of 'v', in increasing order."""
    return tuple(p for p, h in enumerate(hole) if g.has_edge(v, h))


def k_vertex_profile(g: Graph, hole: Sequence[int]) -> dict[int, int]:
    """Count the vertices outside a hole by their number of neighbours on it.

    Returns
    -------
    dict[int, int]
        Maps ``k`` to the number of vertices with exactly ``k`` neighbours on the hole, for every
        ``k`` that occurs.

    """
    hole = check_hole(g, hole)
    outside = g.full_mask & ~bits.pack(hole)
    counts = collections.Counter(
        (g.neighbors(v) & bits.pack(hole)).bit_count() for v in bits.iter_bits(outside)
    )

    return dict(sorted(counts.items()))


@dataclasses.dataclass(frozen=True, slots=True)
class C5Structure:
    """The X, Y and R sets of a graph relative to a fixed 5-hole."""

    #: The hole in cyclic order; ``c5[i]`` sits at position ``i``.
    c5: tuple[int, ...]

    #: ``x[i]`` holds the sorted vertices adjacent to exactly positions ``i, i+1``.
    x: tuple[tuple[int, ...], ...]

    #: ``y[i]`` holds the sorted vertices adjacent to exactly positions ``i..i+3``.
    y: tuple[tuple[int, ...], ...]

    #: The vertices without a neighbour on the hole.
    r: tuple[int, ...]

    def x_mask(self, i: int) -> Bitset:
        """Get ``X[i]`` as a bitset, with 'i' taken modulo 5."""
        return bits.pack(self.x[i % _LENGTH])

    def y_mask(self, i: int) -> Bitset:
        """Get ``Y[i]`` as a bitset, with 'i' taken modulo 5."""
        return bits.pack(self.y[i % _LENGTH])

    @property
    def x_union(self) -> Bitset:
        """Get all of X as a bitset."""
        return bits.pack(v for part in self.x for v in part)

    @property
    def y_union(self) -> Bitset:
        """Get all of Y as a bitset."""
        return bits.pack(v for part in self.y for v in part)

    def x_sizes(self) -> tuple[int, ...]:
        """Get the size of every X set."""
        return tuple(len(part) for part in self.x)

    def nonempty_x(self) -> tuple[int, ...]:
        """Get the positions with a non-empty X set."""
        return tuple(i for i, part in enumerate(self.x) if part)

    def y_vertex(self, i: int) -> int | None:
        """Get the vertex of ``Y[i]`` if there is exactly one."""
        part = self.y[i % _LENGTH]
        return part[0] if len(part) == 1 else None

    def to_dict(self) -> dict[str, Any]:
        """Get a JSON-compatible form of the partition."""
        return {
            "c5": list(self.c5),
            "X": [list(part) for part in self.x],
            "Y": [list(part) for part in self.y],
            "R": list(self.r),
        }


def classify_c5(g: Graph, c5: Sequence[int]) -> C5Structure:
    """Sort every vertex outside a 5-hole into its X, Y or R set.

    Parameters
    ----------
    g : Graph
        A connected class member.
    c5 : Sequence[int]
        An induced 5-cycle of 'g' in cyclic order.

    Returns
    -------
    C5Structure
        The partition of the remaining vertices.

    Raises
    ------
    PreconditionError
        Raised if 'c5' is not an induced 5-cycle in the listed order.
    StructureViolationError
        Raised if an outside vertex fits none of the sets; its hole neighbourhood is attached.

    """
    if len(c5) != _LENGTH:
        raise PreconditionError(f"expected 5 hole vertices; got {len(c5)}")

    hole = check_hole(g, c5)
    x: list[list[int]] = [[] for _ in range(_LENGTH)]
    y: list[list[int]] = [[] for _ in range(_LENGTH)]
    r: list[int] = []

    for v in bits.iter_bits(g.full_mask & ~bits.pack(hole)):
        positions = hole_positions(g, hole, v)

        match len(positions):
            case 0:
                r.append(v)
                continue
            case 2 if (start := cyclic_run(positions, 2)) is not None:
                x[start].append(v)
                continue
            case 4:
                missing = next(p for p in range(_LENGTH) if p not in positions)
                y[(missing + 1) % _LENGTH].append(v)
                continue

        raise StructureViolationError(
            "classify_c5",
            f"vertex {v} has hole neighbours at positions {list(positions)}",
            vertices=(v,),
            hole=list(hole),
            positions=list(positions),
        )

    return C5Structure(
        c5=hole,
        x=tuple(tuple(part) for part in x),
        y=tuple(tuple(part) for part in y),
        r=tuple(r),
    )


def cyclic_run(positions: Sequence[int], length: int, modulus: int = _LENGTH) -> int | None:
    """Get 'i' if the positions are exactly ``i, i+1, ..., i+length-1`` modulo 'modulus'."""
    wanted = set(positions)

    for start in range(modulus):
        if {(start + k) % modulus for k in range(length)} == wanted:
            return start

    return None
