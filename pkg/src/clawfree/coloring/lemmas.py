"""Colorings of class members whose 5-hole partition has X sets at three fixed positions.

Both constructions apply when R is empty and only ``X[i]``, ``X[i+1]`` and ``X[i+3]`` may be
non-empty for some position 'i', which is called the anchor here. They color with exactly the
clique number, peeling off a stable set that meets every largest clique until a small base case
remains.
"""

from __future__ import annotations

import dataclasses
import itertools
import typing

import structlog

from clawfree.coloring.constants import DEFAULT_NODE_BUDGET
from clawfree.coloring.exact import exact_color
from clawfree.coloring.lists import ListInstance, l_color_three_cliques
from clawfree.core.exceptions import PreconditionError, StructureViolationError
from clawfree.graph.models import Coloring
from clawfree.graph.operations import induced_subgraph, is_stable
from clawfree.recognition.cliques import clique_number
from clawfree.structure.c5 import classify_c5
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from clawfree.graph.models import Graph
    from clawfree.structure.c5 import C5Structure
    from clawfree.util.typing import Bitset

__all__ = (
    "StableSet",
    "color_k_colorable_case",
    "color_three_xi_case",
    "good_stable_set",
    "x_anchor",
)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()


@dataclasses.dataclass(frozen=True, slots=True)
class StableSet:
    """Pairwise nonadjacent vertices that meet every largest clique of their graph."""

    vertices: tuple[int, ...]

    @property
    def mask(self) -> Bitset:
        """Get the vertices as a bitset."""
        return bits.pack(self.vertices)


def x_anchor(s: C5Structure) -> int | None:
    """Get the smallest 'i' with ``X[i+2]`` and ``X[i+4]`` empty, if there is one."""
    return next((i for i in range(5) if not s.x[(i + 2) % 5] and not s.x[(i + 4) % 5]), None)


def _require_anchor(s: C5Structure, stage: str) -> int:
    if s.r:
        raise PreconditionError(f"{stage} needs R empty; got {list(s.r)}")

    if (anchor := x_anchor(s)) is None:
        raise PreconditionError(
            f"{stage} needs the non-empty X sets at positions i, i+1, i+3; got {s.x_sizes()}",
        )

    return anchor


def good_stable_set(g: Graph, s: C5Structure) -> StableSet:
    """Find a stable set meeting every largest clique, with a vertex in every X set of size two.

    Vertex choices are tried in lexicographic order; one-vertex X sets may be skipped or used.

    Parameters
    ----------
    g : Graph
        A class member.
    s : C5Structure
        Its partition around a 5-hole, with R empty and the non-empty X sets at an anchor.

    Returns
    -------
    StableSet
        The first stable set found whose removal lowers the clique number by one.

    Raises
    ------
    PreconditionError
        Raised if the partition is outside the anchored shape or every X set has fewer than two
        vertices.
    StructureViolationError
        Raised if no such stable set exists.

    """
    _require_anchor(s, "good_stable_set")

    if all(len(part) < 2 for part in s.x):  # noqa: PLR2004
        raise PreconditionError("good_stable_set needs an X set with two vertices or more")

    omega = clique_number(g).value
    choices: list[tuple[int | None, ...]] = [
        tuple(part) if len(part) >= 2 else (None, *part)  # noqa: PLR2004
        for part in s.x
        if part
    ]

    for combo in itertools.product(*choices):
        picked = tuple(sorted(v for v in combo if v is not None))

        if not is_stable(g, picked):
            continue

        if clique_number(g, g.full_mask & ~bits.pack(picked)).value == omega - 1:
            return StableSet(picked)

    raise StructureViolationError(
        "good_stable_set",
        f"no stable set across the X sets lowers the clique number {omega}",
        vertices=tuple(bits.members(s.x_union)),
        x_sizes=list(s.x_sizes()),
    )


def _peel(g: Graph, s: C5Structure, stable: StableSet) -> tuple[Graph, C5Structure, list[int]]:
    """Remove a stable set of X vertices and partition the rest around the same hole."""
    kept = bits.members(g.full_mask & ~stable.mask)
    position = {v: k for k, v in enumerate(kept)}
    sub = induced_subgraph(g, kept)

    return sub, classify_c5(sub, [position[v] for v in s.c5]), kept


def _extend(kept: list[int], sub_coloring: Coloring, stable: StableSet, n: int) -> Coloring:
    """Lift a coloring of the peeled graph and give the stable set one new color."""
    colors = sub_coloring.normalized()
    mapping = {v: colors[k] for k, v in enumerate(kept)}
    mapping |= dict.fromkeys(stable.vertices, colors.color_count)

    return Coloring.from_mapping(mapping, n)


def _certify(g: Graph, coloring: Coloring, expected: int, stage: str) -> Coloring:
    coloring.verify(g)

    if coloring.color_count != expected:
        raise StructureViolationError(
            stage,
            f"used {coloring.color_count} colors where {expected} should suffice",
            expected=expected,
        )

    return coloring


def color_three_xi_case(
    g: Graph,
    s: C5Structure,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Coloring:
    """Color with the clique number when R and Y are empty and X sits at an anchor.

    While some X set has three vertices or more a good stable set is peeled off and gets a color
    of its own. The base case, every X set with at most two vertices, has clique number three or
    four (three colors for a bare hole) and is colored exactly.

    Raises
    ------
    PreconditionError
        Raised if R or Y is non-empty or the X sets are not at an anchor.
    StructureViolationError
        Raised if the coloring needs more colors than the clique number.

    """
    _require_anchor(s, "color_three_xi_case")

    if s.y_union:
        raise PreconditionError("color_three_xi_case needs Y empty")

    omega = max(clique_number(g).value, 3)

    if max(s.x_sizes()) <= 2:  # noqa: PLR2004
        return _certify(g, exact_color(g, node_budget=node_budget), omega, "color_three_xi_case")

    stable = good_stable_set(g, s)
    sub, sub_structure, kept = _peel(g, s, stable)
    sub_coloring = color_three_xi_case(sub, sub_structure, node_budget=node_budget)
    coloring = _extend(kept, sub_coloring, stable, g.vertex_count)

    return _certify(g, coloring, omega, "color_three_xi_case")


def _five_coloring(g: Graph, s: C5Structure, anchor: int) -> Coloring:
    """Color the hole and Y directly, then X from lists that avoid those colors."""
    mapping = {v: p for p, v in enumerate(s.c5)}

    for i in range(5):
        if (y := s.y_vertex(i)) is not None:
            mapping[y] = (i - 1) % 5
        elif s.y[i]:
            raise StructureViolationError(
                "color_k_colorable_case",
                f"Y[{i}] has {len(s.y[i])} vertices",
                vertices=s.y[i],
            )

    positions = (anchor, (anchor + 1) % 5, (anchor + 3) % 5)
    lists: list[set[int]] = []

    for i in positions:
        size = len(s.x[i])
        has_y = s.y_vertex(i) is not None, s.y_vertex(i + 3) is not None

        if size <= 1:
            colors = {(i + 3) % 5}
        elif size == 2 and not all(has_y):  # noqa: PLR2004
            free_y = (i + 4) % 5 if not has_y[0] else (i + 2) % 5
            colors = {(i + 3) % 5, free_y}
        elif size == 3 and not any(has_y):  # noqa: PLR2004
            colors = {(i + 2) % 5, (i + 3) % 5, (i + 4) % 5}
        else:
            raise StructureViolationError(
                "color_k_colorable_case",
                f"X[{i}] has {size} vertices next to Y vertices at {has_y} with clique number 5",
                vertices=s.x[i],
            )

        lists.append(colors)

    instance = ListInstance.build(
        g,
        [s.x[i] for i in positions],
        lists,
        [(i + 3) % 5 for i in positions],
    )

    try:
        instance.validate()
    except PreconditionError as e:
        raise StructureViolationError(
            "color_k_colorable_case",
            f"X lists break a list coloring condition: {e.message}",
            vertices=instance.vertices,
            instance=instance.to_dict(),
        ) from e

    mapping |= l_color_three_cliques(instance)

    coloring = Coloring.from_mapping(mapping, g.vertex_count)

    if (edge := coloring.conflict(g)) is not None:
        raise StructureViolationError(
            "color_k_colorable_case",
            f"X colors clash with the hole or Y on edge {list(edge)}",
            vertices=edge,
        )

    return coloring


def color_k_colorable_case(g: Graph, s: C5Structure) -> Coloring:
    """Color with the clique number when it is at least five, R is empty and X sits at an anchor.

    With clique number five the hole and Y are colored directly and X is list colored. Above
    five a good stable set is peeled off first.

    Parameters
    ----------
    g : Graph
        A class member.
    s : C5Structure
        Its partition around a 5-hole.

    Returns
    -------
    Coloring
        A proper coloring with exactly as many colors as the clique number.

    Raises
    ------
    PreconditionError
        Raised if R is non-empty, the X sets are not at an anchor or the clique number is below
        five.
    StructureViolationError
        Raised if the partition breaks a fact the construction relies on.

    """
    anchor = _require_anchor(s, "color_k_colorable_case")
    omega = clique_number(g).value

    if omega < 5:  # noqa: PLR2004
        raise PreconditionError(f"color_k_colorable_case needs clique number 5+; got {omega}")

    if omega == 5:  # noqa: PLR2004
        return _certify(g, _five_coloring(g, s, anchor), omega, "color_k_colorable_case")

    stable = good_stable_set(g, s)
    sub, sub_structure, kept = _peel(g, s, stable)
    _log.debug("Peeled a good stable set.", stable=list(stable.vertices), omega=omega)

    coloring = _extend(kept, color_k_colorable_case(sub, sub_structure), stable, g.vertex_count)

    return _certify(g, coloring, omega, "color_k_colorable_case")
