"""Optimal coloring of graphs without three pairwise nonadjacent vertices."""

from __future__ import annotations

import typing

import structlog

from clawfree.core.exceptions import PreconditionError
from clawfree.graph.matching import max_matching
from clawfree.graph.models import Coloring
from clawfree.graph.operations import complement
from clawfree.recognition.cliques import stability_number
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from clawfree.graph.models import Graph

__all__ = ("color_alpha2",)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()


def color_alpha2(g: Graph) -> Coloring:
    """Color a graph whose color classes can have at most two vertices.

    Every color class is a clique of the complement, so a maximum matching of the complement gives
    the largest number of two-vertex classes and ``n - nu`` colors is optimal.

    Raises
    ------
    PreconditionError
        Raised if 'g' has three pairwise nonadjacent vertices.

    """
    alpha, stable = stability_number(g)

    if alpha > 2:  # noqa: PLR2004
        raise PreconditionError(f"stable set {list(stable)} has more than two vertices")

    matching = max_matching(complement(g))
    unmatched = g.full_mask & ~matching.covered
    classes = sorted([[u, v] for u, v in matching.edges] + [[v] for v in bits.iter_bits(unmatched)])
    mapping = {v: color for color, members in enumerate(classes) for v in members}

    coloring = Coloring.from_mapping(mapping, g.vertex_count)
    coloring.verify(g)

    _log.debug("Colored from complement matching.", matched=matching.size, colors=len(classes))

    return coloring
