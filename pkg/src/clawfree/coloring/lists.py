"""List coloring of three cliques with sparse cross edges.

The vertices are split into three cliques; every vertex sees at most one vertex of each other
clique, and all vertices of a clique share one color list. When the designated colors are distinct
and no color sits in all three lists, a list coloring always exists and is built one or two
vertices at a time.
"""

from __future__ import annotations

import dataclasses
import itertools
import typing

import structlog

from clawfree.core.exceptions import InternalError, PreconditionError, StructureViolationError
from clawfree.graph.operations import is_clique

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence
    from typing import Any

    from clawfree.graph.models import Graph

__all__ = (
    "ListInstance",
    "l_color_three_cliques",
)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()


@dataclasses.dataclass(frozen=True, slots=True)
class ListInstance:
    """Three cliques of a host graph with one color list and one designated color each.

    Only the edges of 'graph' among the clique vertices matter; other vertices are ignored.
    """

    graph: Graph
    cliques: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    lists: tuple[frozenset[int], frozenset[int], frozenset[int]]
    designated: tuple[int, int, int]

    @classmethod
    def build(
        cls,
        graph: Graph,
        cliques: Sequence[Iterable[int]],
        lists: Sequence[Iterable[int]],
        designated: Sequence[int],
    ) -> ListInstance:
        """Build an instance from any iterables, sorting cliques and freezing lists."""
        q1, q2, q3 = (tuple(sorted(q)) for q in cliques)
        l1, l2, l3 = (frozenset(colors) for colors in lists)
        d1, d2, d3 = designated

        return cls(graph, (q1, q2, q3), (l1, l2, l3), (d1, d2, d3))

    @property
    def vertices(self) -> tuple[int, ...]:
        """Get every clique vertex, sorted."""
        return tuple(sorted(v for q in self.cliques for v in q))

    def list_of(self, v: int) -> frozenset[int]:
        """Get the colors allowed at 'v'."""
        for q, colors in zip(self.cliques, self.lists, strict=True):
            if v in q:
                return colors

        raise PreconditionError(f"vertex {v} is in none of the cliques")

    def validate(self) -> None:
        """Check every condition under which a list coloring is guaranteed.

        Raises
        ------
        PreconditionError
            Raised with the first failed condition.

        """
        g = self.graph

        if not len(self.cliques) == len(self.lists) == len(self.designated) == 3:  # noqa: PLR2004
            raise PreconditionError("a list instance has exactly three cliques, lists and colors")

        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionError("the cliques are not disjoint")

        if any(not 0 <= v < g.vertex_count for v in self.vertices):
            raise PreconditionError("a clique vertex is not a vertex of the graph")

        for i, q in enumerate(self.cliques):
            if not is_clique(g, q):
                raise PreconditionError(f"Q[{i}] = {list(q)} is not a clique")

            if len(self.lists[i]) < len(q):
                raise PreconditionError(f"L[{i}] has fewer colors than Q[{i}] has vertices")

            if self.designated[i] not in self.lists[i]:
                raise PreconditionError(f"designated color {self.designated[i]} is not in L[{i}]")

        if len(set(self.designated)) != 3:  # noqa: PLR2004
            raise PreconditionError(f"designated colors {list(self.designated)} are not distinct")

        if shared := self.lists[0] & self.lists[1] & self.lists[2]:
            raise PreconditionError(f"colors {sorted(shared)} are in all three lists")

        for i, j in itertools.permutations(range(3), 2):
            for v in self.cliques[i]:
                if sum(g.has_edge(v, u) for u in self.cliques[j]) > 1:
                    raise PreconditionError(f"vertex {v} has two neighbours in Q[{j}]")

        for i, j, k in itertools.permutations(range(3)):
            for v, b, c in itertools.product(self.cliques[i], self.cliques[j], self.cliques[k]):
                if g.has_edge(v, b) and g.has_edge(v, c) and not g.has_edge(b, c):
                    raise PreconditionError(
                        f"vertex {v} sees {b} and {c} in two other cliques but they are apart",
                    )

    def check(self, assignment: Mapping[int, int]) -> tuple[int, int] | None:
        """Get a conflict in 'assignment': ``(v, v)`` for a list miss, an edge for a clash."""
        for v in self.vertices:
            if assignment.get(v) not in self.list_of(v):
                return v, v

        return next(
            (
                (u, v)
                for u, v in itertools.combinations(self.vertices, 2)
                if self.graph.has_edge(u, v) and assignment[u] == assignment[v]
            ),
            None,
        )

    def to_dict(self) -> dict[str, Any]:
        """Get a JSON-compatible form of the instance."""
        return {
            "cliques": [list(q) for q in self.cliques],
            "lists": [sorted(colors) for colors in self.lists],
            "designated": list(self.designated),
        }


class _Reduction:
    """Mutable state of the reduction: the uncolored part of every clique and its list."""

    def __init__(self, inst: ListInstance) -> None:
        self.g = inst.graph
        self.cliques = [list(q) for q in inst.cliques]
        self.lists = [set(colors) for colors in inst.lists]
        self.designated = inst.designated
        self.assignment: dict[int, int] = {}

    def color(self, c: int, *vertices: int) -> None:
        for v in vertices:
            self.assignment[v] = c

            for q in self.cliques:
                if v in q:
                    q.remove(v)

    def singleton_step(self) -> bool:
        """Color the vertex of a one-vertex clique with its designated color."""
        for i in range(3):
            if len(self.cliques[i]) != 1:
                continue

            v, d = self.cliques[i][0], self.designated[i]
            holders = [j for j in range(3) if j != i and d in self.lists[j]]

            if not holders:
                self.color(d, v)
                return True

            for j in holders:
                if len(self.cliques[j]) >= 2:  # noqa: PLR2004
                    b = next(b for b in self.cliques[j] if not self.g.has_edge(v, b))
                    self.color(d, v, b)
                    self.lists[j].discard(d)
                    return True

            # the only holder is another one-vertex clique
            self.color(d, v)
            self.lists[holders[0]].discard(d)
            return True

        return False

    def spare_color_step(self) -> bool:
        """Spend a non-designated color on one vertex or on a nonadjacent pair."""
        spare = set().union(*self.lists) - set(self.designated)

        for c in sorted(spare):
            holders = [i for i in range(3) if c in self.lists[i]]

            if len(holders) == 1:
                (i,) = holders
                self.color(c, self.cliques[i][0])
                self.lists[i].discard(c)
                return True

            i, j = holders
            a, b = next(
                (a, b)
                for a, b in itertools.product(self.cliques[i], self.cliques[j])
                if not self.g.has_edge(a, b)
            )
            self.color(c, a, b)
            self.lists[i].discard(c)
            self.lists[j].discard(c)
            return True

        return False

    def finish(self) -> bool:
        """Color whatever is left by backtracking over the remaining lists."""
        order = [(v, sorted(self.lists[i])) for i in range(3) for v in self.cliques[i]]

        def extend(k: int) -> bool:
            if k == len(order):
                return True

            v, colors = order[k]

            for c in colors:
                if all(self.assignment[u] != c for u in self.assignment if self.g.has_edge(u, v)):
                    self.assignment[v] = c

                    if extend(k + 1):
                        return True

                    del self.assignment[v]

            return False

        return extend(0)


def l_color_three_cliques(inst: ListInstance) -> dict[int, int]:
    """Color every clique vertex from its clique's list.

    While every clique is non-empty and some clique has two vertices or more, one or two vertices
    are colored and removed: a one-vertex clique takes its designated color, otherwise a
    non-designated color goes to a single vertex or to a nonadjacent pair in two cliques. The
    remaining instance, with an empty clique or three two-vertex cliques over the designated
    colors, is finished by backtracking.

    Parameters
    ----------
    inst : ListInstance
        The instance.

    Returns
    -------
    dict[int, int]
        A color for every clique vertex.

    Raises
    ------
    PreconditionError
        Raised if the instance fails one of its conditions.
    StructureViolationError
        Raised if no list coloring is found.
    InternalError
        Raised if the coloring found breaks a list or an edge.

    """
    inst.validate()
    state = _Reduction(inst)

    while all(state.cliques):
        if all(len(q) == 1 for q in state.cliques):
            for q, d in zip(state.cliques, state.designated, strict=True):
                state.color(d, q[0])

            break

        if not state.singleton_step() and not state.spare_color_step():
            break

    if not state.finish():
        raise StructureViolationError(
            "l_color_three_cliques",
            "no list coloring exists for the remaining vertices",
            vertices=tuple(v for q in state.cliques for v in q),
            instance=inst.to_dict(),
        )

    if (conflict := inst.check(state.assignment)) is not None:
        raise InternalError(f"list coloring broke at {list(conflict)}")

    _log.debug("List colored three cliques.", vertices=len(inst.vertices))

    return {v: state.assignment[v] for v in inst.vertices}
