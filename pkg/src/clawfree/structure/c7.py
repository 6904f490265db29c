"""Classification of the vertices outside a 7-hole.

In a class member every vertex outside a 7-hole has exactly four hole neighbours, either four
consecutive positions ``i..i+3`` (``Y[i]``) or ``i, i+1, i+3, i+4`` (``Z[i]``), with positions
taken modulo 7. Each of these fourteen sets holds at most one vertex, so such graphs have at most
21 vertices.
"""

from __future__ import annotations

import dataclasses
import typing

from clawfree.core.exceptions import PreconditionError, StructureViolationError
from clawfree.structure.c5 import check_hole, cyclic_run, hole_positions
from clawfree.structure.claims import Violation
from clawfree.structure.enum import Claim
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from collections.abc import Sequence
    from typing import Any

    from clawfree.graph.models import Graph

__all__ = (
    "C7_ORDER_BOUND",
    "C7Structure",
    "classify_c7",
    "validate_c7_claims",
)

_LENGTH = 7

#: The largest class member containing a 7-hole.
C7_ORDER_BOUND = 21


@dataclasses.dataclass(frozen=True, slots=True)
class C7Structure:
    """The Y and Z sets of a graph relative to a fixed 7-hole."""

    c7: tuple[int, ...]
    y: tuple[tuple[int, ...], ...]
    z: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict[str, Any]:
        """Get a JSON-compatible form of the partition."""
        return {
            "c7": list(self.c7),
            "Y": [list(part) for part in self.y],
            "Z": [list(part) for part in self.z],
        }


def _z_start(positions: Sequence[int]) -> int | None:
    wanted = set(positions)

    for start in range(_LENGTH):
        if {(start + k) % _LENGTH for k in (0, 1, 3, 4)} == wanted:
            return start

    return None


def classify_c7(g: Graph, c7: Sequence[int]) -> C7Structure:
    """Sort every vertex outside a 7-hole into its Y or Z set.

    Raises
    ------
    PreconditionError
        Raised if 'c7' is not an induced 7-cycle in the listed order.
    StructureViolationError
        Raised if an outside vertex fits neither kind; its hole neighbourhood is attached.

    """
    if len(c7) != _LENGTH:
        raise PreconditionError(f"expected 7 hole vertices; got {len(c7)}")

    hole = check_hole(g, c7)
    y: list[list[int]] = [[] for _ in range(_LENGTH)]
    z: list[list[int]] = [[] for _ in range(_LENGTH)]

    for v in bits.iter_bits(g.full_mask & ~bits.pack(hole)):
        positions = hole_positions(g, hole, v)

        if len(positions) == 4:  # noqa: PLR2004
            if (start := cyclic_run(positions, 4, _LENGTH)) is not None:
                y[start].append(v)
                continue

            if (start := _z_start(positions)) is not None:
                z[start].append(v)
                continue

        raise StructureViolationError(
            "classify_c7",
            f"vertex {v} has hole neighbours at positions {list(positions)}",
            vertices=(v,),
            hole=list(hole),
            positions=list(positions),
        )

    return C7Structure(
        c7=hole,
        y=tuple(tuple(part) for part in y),
        z=tuple(tuple(part) for part in z),
    )


def validate_c7_claims(g: Graph, s: C7Structure) -> list[Violation]:
    """Check the facts that hold around a 7-hole of a class member.

    Returns
    -------
    list[Violation]
        Every failed fact; empty when all hold.

    """
    violations = [
        Violation(Claim.C7_SETS_HAVE_AT_MOST_ONE_VERTEX, part, f"{name}[{i}] has {len(part)}")
        for name, sets in (("Y", s.y), ("Z", s.z))
        for i, part in enumerate(sets)
        if len(part) > 1
    ]

    if g.vertex_count > C7_ORDER_BOUND:
        violations.append(
            Violation(
                Claim.C7_BOUNDS_ORDER,
                (),
                f"graph has {g.vertex_count} vertices",
            ),
        )

    return violations
