"""Runtime checks of the structural facts around a 5-hole.

Each fact is an independent predicate so a failure names exactly which one broke. The facts hold
for every connected class member; a violation means the input left the class or a bug upstream
produced a bad partition.
"""

from __future__ import annotations

import dataclasses
import itertools
import typing

from clawfree.decomposition import find_clique_cutset
from clawfree.graph.operations import is_clique, is_connected
from clawfree.structure.enum import Claim
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator, Sequence
    from typing import Any

    from clawfree.graph.models import Graph
    from clawfree.structure.c5 import C5Structure

__all__ = (
    "R_ORDER_BOUND",
    "Violation",
    "validate_claims",
)

#: The largest atom with a 5-hole and a non-empty R.
R_ORDER_BOUND = 22


@dataclasses.dataclass(frozen=True, slots=True)
class Violation:
    """A structural fact that failed, with the vertices that witness the failure."""

    claim: Claim
    vertices: tuple[int, ...]
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        """Get a JSON-compatible form of the violation."""
        return {"claim": str(self.claim), "vertices": list(self.vertices), "detail": self.detail}

    def __str__(self) -> str:
        """Describe the violation."""
        suffix = f": {self.detail}" if self.detail else ""
        return f"{self.claim} on {list(self.vertices)}{suffix}"


def _pairs(
    xs: Iterable[int],
    ys: Iterable[int],
    *,
    adjacent: bool,
    g: Graph,
) -> Iterator[tuple[int, int]]:
    """Yield the pairs across two vertex sets whose adjacency equals 'adjacent'."""
    for u, v in itertools.product(xs, ys):
        if u != v and g.has_edge(u, v) == adjacent:
            yield u, v


def _nonadjacent_pair(g: Graph, vs: Sequence[int]) -> tuple[int, int] | None:
    return next(
        ((u, v) for u, v in itertools.combinations(vs, 2) if not g.has_edge(u, v)),
        None,
    )


def _y_sets_small(g: Graph, s: C5Structure) -> Iterator[Violation]:  # noqa: ARG001
    for i, part in enumerate(s.y):
        if len(part) > 1:
            yield Violation(Claim.Y_SETS_HAVE_AT_MOST_ONE_VERTEX, part, f"Y[{i}] has {len(part)}")


def _consecutive_y_cojoined(g: Graph, s: C5Structure) -> Iterator[Violation]:
    for i in range(5):
        for pair in _pairs(s.y[i], s.y[(i + 1) % 5], adjacent=True, g=g):
            yield Violation(Claim.CONSECUTIVE_Y_SETS_ARE_COJOINED, pair, f"Y[{i}]-Y[{(i + 1) % 5}]")


def _x_joined_to_y(g: Graph, s: C5Structure) -> Iterator[Violation]:
    for i in range(5):
        flanks = s.y[i] + s.y[(i + 3) % 5]

        for pair in _pairs(s.x[i], flanks, adjacent=False, g=g):
            yield Violation(Claim.X_JOINED_TO_Y_I_AND_Y_I_PLUS_3, pair, f"X[{i}]")


def _opposite_y_adjacent(g: Graph, s: C5Structure) -> Iterator[Violation]:
    for i in range(5):
        if not s.x[i]:
            continue

        for pair in _pairs(s.y[i], s.y[(i + 3) % 5], adjacent=False, g=g):
            yield Violation(Claim.OPPOSITE_Y_ADJACENT_WHEN_X_NONEMPTY, pair, f"X[{i}] non-empty")


def _x_cojoined_to_other_y(g: Graph, s: C5Structure) -> Iterator[Violation]:
    for i in range(5):
        others = s.y[(i + 1) % 5] + s.y[(i + 2) % 5] + s.y[(i + 4) % 5]

        for pair in _pairs(s.x[i], others, adjacent=True, g=g):
            yield Violation(Claim.X_COJOINED_TO_OTHER_Y, pair, f"X[{i}]")


def _r_cojoined_to_y(g: Graph, s: C5Structure) -> Iterator[Violation]:
    ys = tuple(v for part in s.y for v in part)

    for pair in _pairs(s.r, ys, adjacent=True, g=g):
        yield Violation(Claim.R_COJOINED_TO_Y, pair)


def _r_needs_x(g: Graph, s: C5Structure) -> Iterator[Violation]:
    if s.r and not s.x_union and is_connected(g):
        yield Violation(Claim.R_NONEMPTY_IMPLIES_X_NONEMPTY, s.r, "R non-empty with X empty")


def _x_cliques(g: Graph, s: C5Structure) -> Iterator[Violation]:
    for i, part in enumerate(s.x):
        if pair := _nonadjacent_pair(g, part):
            yield Violation(Claim.X_SETS_ARE_CLIQUES, pair, f"X[{i}]")


def _r_clique(g: Graph, s: C5Structure) -> Iterator[Violation]:
    if pair := _nonadjacent_pair(g, s.r):
        yield Violation(Claim.R_IS_A_CLIQUE, pair)


def _r_joined_to_x(g: Graph, s: C5Structure) -> Iterator[Violation]:
    for pair in _pairs(s.r, bits.members(s.x_union), adjacent=False, g=g):
        yield Violation(Claim.R_JOINED_TO_X, pair)


def _r_limits_x(g: Graph, s: C5Structure) -> Iterator[Violation]:  # noqa: ARG001
    if not s.r:
        return

    for i, part in enumerate(s.x):
        if len(part) > 2:  # noqa: PLR2004
            yield Violation(Claim.R_LIMITS_X_SIZES, part, f"X[{i}] has {len(part)} with R set")


def _one_neighbour_per_other_x(g: Graph, s: C5Structure) -> Iterator[Violation]:
    for i, j in itertools.permutations(range(5), 2):
        for v in s.x[i]:
            if len(hits := bits.members(g.neighbors(v) & s.x_mask(j))) > 1:
                yield Violation(Claim.ONE_NEIGHBOUR_PER_OTHER_X, (v, *hits), f"X[{i}] into X[{j}]")


def _no_nonadjacent_neighbours(g: Graph, s: C5Structure) -> Iterator[Violation]:
    for i, part in enumerate(s.x):
        outside = s.x_union & ~s.x_mask(i)

        for v in part:
            if pair := _nonadjacent_pair(g, bits.members(g.neighbors(v) & outside)):
                yield Violation(Claim.NO_NONADJACENT_NEIGHBOURS_IN_OTHER_X, (v, *pair), f"X[{i}]")


def _small_r_or_x_cutset(g: Graph, s: C5Structure) -> Iterator[Violation]:
    x = s.x_union

    if not x or len(s.r) <= 2:  # noqa: PLR2004
        return

    if not is_clique(g, x) or is_connected(g, g.full_mask & ~x):
        yield Violation(
            Claim.SMALL_R_OR_X_CLIQUE_CUTSET,
            tuple(bits.members(x)),
            f"|R| = {len(s.r)} but X is not a clique cutset",
        )


def _r_bounds_order(g: Graph, s: C5Structure) -> Iterator[Violation]:
    if not s.r or g.vertex_count <= R_ORDER_BOUND or not is_connected(g):
        return

    if find_clique_cutset(g) is None:
        yield Violation(
            Claim.R_BOUNDS_ORDER_OR_CLIQUE_CUTSET,
            s.r,
            f"{g.vertex_count} vertices, R non-empty and no clique cutset",
        )


def _big_x_flanks(g: Graph, s: C5Structure) -> Iterator[Violation]:  # noqa: ARG001
    for i in range(5):
        run = [(i + k) % 5 for k in range(3)]

        if not all(s.x[j] for j in run):
            continue

        for j in run:
            if len(s.x[j]) < 3:  # noqa: PLR2004
                continue

            for k in run:
                if k != j and len(s.x[k]) != 1:
                    yield Violation(
                        Claim.BIG_X_FORCES_SINGLETON_FLANKS,
                        s.x[k],
                        f"X[{j}] has {len(s.x[j])} so X[{k}] must have one vertex",
                    )


_CHECKS: dict[Claim, Callable[[Graph, C5Structure], Iterator[Violation]]] = {
    Claim.Y_SETS_HAVE_AT_MOST_ONE_VERTEX: _y_sets_small,
    Claim.CONSECUTIVE_Y_SETS_ARE_COJOINED: _consecutive_y_cojoined,
    Claim.X_JOINED_TO_Y_I_AND_Y_I_PLUS_3: _x_joined_to_y,
    Claim.OPPOSITE_Y_ADJACENT_WHEN_X_NONEMPTY: _opposite_y_adjacent,
    Claim.X_COJOINED_TO_OTHER_Y: _x_cojoined_to_other_y,
    Claim.R_COJOINED_TO_Y: _r_cojoined_to_y,
    Claim.R_NONEMPTY_IMPLIES_X_NONEMPTY: _r_needs_x,
    Claim.X_SETS_ARE_CLIQUES: _x_cliques,
    Claim.R_IS_A_CLIQUE: _r_clique,
    Claim.R_JOINED_TO_X: _r_joined_to_x,
    Claim.R_LIMITS_X_SIZES: _r_limits_x,
    Claim.ONE_NEIGHBOUR_PER_OTHER_X: _one_neighbour_per_other_x,
    Claim.NO_NONADJACENT_NEIGHBOURS_IN_OTHER_X: _no_nonadjacent_neighbours,
    Claim.SMALL_R_OR_X_CLIQUE_CUTSET: _small_r_or_x_cutset,
    Claim.R_BOUNDS_ORDER_OR_CLIQUE_CUTSET: _r_bounds_order,
    Claim.BIG_X_FORCES_SINGLETON_FLANKS: _big_x_flanks,
}


def validate_claims(
    g: Graph,
    s: C5Structure,
    claims: Iterable[Claim] | None = None,
) -> list[Violation]:
    """Check the structural facts around the 5-hole of 's'.

    Facts that depend on connectivity are skipped for disconnected graphs.

    Parameters
    ----------
    g : Graph
        The graph 's' was computed from.
    s : C5Structure
        The partition from 'classify_c5'.
    claims : Iterable[Claim] | None, optional
        Restrict the check to these facts. Every 5-hole fact is checked by default.

    Returns
    -------
    list[Violation]
        Every failure found, grouped by fact in declaration order. Empty when all facts hold.

    """
    selected = set(_CHECKS) if claims is None else {Claim(c) for c in claims}

    return [
        violation
        for claim, check in _CHECKS.items()
        if claim in selected
        for violation in check(g, s)
    ]
