"""Chromatic index of graphs without a matching of four edges.

Edge colorings of a graph are vertex colorings of its line graph. A matching is a stable set of the
line graph, so a graph without four disjoint edges has a line graph without four pairwise
nonadjacent vertices; line graphs avoid the other five forbidden patterns as well, which puts them
in the class the pipeline colors optimally.
"""

from __future__ import annotations

import dataclasses
import typing

import structlog

from clawfree.coloring.constants import DEFAULT_OPTIONS
from clawfree.coloring.pipeline import color_class_graph
from clawfree.core.exceptions import (
    ColoringError,
    InternalError,
    MatchingTooLargeError,
    NotInClassError,
)
from clawfree.graph.matching import max_matching
from clawfree.graph.models import Matching
from clawfree.graph.operations import line_graph

if typing.TYPE_CHECKING:
    from typing import Any

    from clawfree.coloring.constants import SolverOptions
    from clawfree.graph.models import Graph
    from clawfree.util.typing import Edge

__all__ = (
    "MAX_MATCHING_NUMBER",
    "EdgeColoring",
    "MatchingGate",
    "chromatic_index",
    "matching_gate",
)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()

#: The largest matching number accepted by 'chromatic_index'.
MAX_MATCHING_NUMBER = 3


@dataclasses.dataclass(frozen=True, slots=True)
class EdgeColoring:
    """A color for every edge of a graph."""

    #: The edges, ``(u, v)`` with ``u < v``, in lexicographic order.
    edges: tuple[Edge, ...]

    #: ``colors[k]`` is the color of ``edges[k]``.
    colors: tuple[int, ...]

    #: The maximum degree of the graph.
    delta: int

    @property
    def chi_prime(self) -> int:
        """Get the number of distinct colors used."""
        return len(set(self.colors))

    @property
    def vizing_class(self) -> int:
        """Get 1 if the coloring uses as many colors as the maximum degree, else 2."""
        return 1 if self.chi_prime == self.delta else 2

    def color_of(self, u: int, v: int) -> int:
        """Get the color of edge ``uv``.

        Raises
        ------
        ColoringError
            Raised if ``uv`` is not one of the colored edges.

        """
        edge = (min(u, v), max(u, v))

        try:
            return self.colors[self.edges.index(edge)]
        except ValueError:
            raise ColoringError(f"({u}, {v}) is not an edge", edge=edge) from None

    def verify(self, g: Graph) -> None:
        """Check that this colors exactly the edges of 'g' with incident edges differing.

        Raises
        ------
        ColoringError
            Raised if the edges differ from those of 'g' or two incident edges share a color.

        """
        if self.edges != tuple(g.edges()) or len(self.colors) != len(self.edges):
            raise ColoringError("edge coloring does not match the edges of the graph")

        at_vertex: dict[tuple[int, int], Edge] = {}

        for edge, color in zip(self.edges, self.colors, strict=True):
            for v in edge:
                if (other := at_vertex.setdefault((v, color), edge)) != edge:
                    raise ColoringError(
                        f"edges {list(other)} and {list(edge)} meet at {v} with color {color}",
                        edge=edge,
                    )

    def to_dict(self) -> dict[str, Any]:
        """Get a JSON-compatible form of the coloring."""
        return {
            "delta": self.delta,
            "chi_prime": self.chi_prime,
            "edge_colors": [[u, v, c] for (u, v), c in zip(self.edges, self.colors, strict=True)],
            "class": self.vizing_class,
        }


@dataclasses.dataclass(frozen=True, slots=True)
class MatchingGate:
    """The outcome of checking for four disjoint edges."""

    #: The size of a maximum matching.
    matching_number: int

    #: Four disjoint edges when the graph has them.
    witness: Matching | None = None

    @property
    def ok(self) -> bool:
        """Get whether the graph has no matching of four edges."""
        return self.witness is None


def matching_gate(g: Graph) -> MatchingGate:
    """Check whether 'g' has a matching of four edges, keeping four of them as a witness."""
    matching = max_matching(g)

    if matching.size <= MAX_MATCHING_NUMBER:
        return MatchingGate(matching.size)

    return MatchingGate(matching.size, Matching(matching.edges[: MAX_MATCHING_NUMBER + 1]))


def chromatic_index(g: Graph, options: SolverOptions = DEFAULT_OPTIONS) -> EdgeColoring:
    """Color the edges of 'g' with the fewest possible colors.

    Parameters
    ----------
    g : Graph
        A graph without a matching of four edges. Isolated vertices are ignored.
    options : SolverOptions, optional
        The tunables passed to the vertex coloring of the line graph.

    Returns
    -------
    EdgeColoring
        An optimal edge coloring.

    Raises
    ------
    MatchingTooLargeError
        Raised if 'g' has four disjoint edges; they are attached.
    InternalError
        Raised if the line graph falls outside the class or the result breaks the degree bounds.

    """
    gate = matching_gate(g)

    if gate.witness is not None:
        raise MatchingTooLargeError(gate.witness.edges)

    lg, edges = line_graph(g)

    try:
        coloring = color_class_graph(lg, options)
    except NotInClassError as e:
        raise InternalError(f"line graph is not a class member: {e.message}") from e

    result = EdgeColoring(edges, coloring.normalized().colors, g.max_degree())
    result.verify(g)

    if not result.delta <= result.chi_prime <= result.delta + 1:
        raise InternalError(
            f"{result.chi_prime} edge colors outside the degree bounds for maximum degree "
            f"{result.delta}",
        )

    _log.debug(
        "Colored edges.",
        matching_number=gate.matching_number,
        delta=result.delta,
        chi_prime=result.chi_prime,
    )

    return result
