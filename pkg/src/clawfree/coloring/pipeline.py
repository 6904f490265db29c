"""Optimal coloring of class members.

Every connected component is decomposed along clique cutsets and each atom is colored by the
first rule that applies:

#. at most one vertex;
#. no three pairwise nonadjacent vertices: complement matching;
#. no 5-hole and no 7-hole: exact coloring, which must use the clique number of colors;
#. a 7-hole: exact coloring, the atom has at most 21 vertices;
#. a 5-hole with a vertex away from it: exact coloring, the atom has at most 22 vertices;
#. clique number below 14: exact coloring;
#. a vertex of degree at most 13: color the rest, then give it a free color;
#. otherwise exactly three big X sets sit at an anchor and the partition gives the coloring.

Atom colorings are merged along the cutsets.
"""

from __future__ import annotations

import collections
import typing

import structlog

from clawfree.coloring.alpha2 import color_alpha2
from clawfree.coloring.constants import DEFAULT_OPTIONS, DEGREE_THRESHOLD, OMEGA_THRESHOLD
from clawfree.coloring.enum import Stage
from clawfree.coloring.exact import exact_color
from clawfree.coloring.lemmas import color_k_colorable_case, x_anchor
from clawfree.core.exceptions import NotInClassError, StructureViolationError
from clawfree.decomposition import decompose, recombine
from clawfree.graph.models import Coloring
from clawfree.graph.operations import components, induced_subgraph
from clawfree.recognition.cliques import clique_number, stability_number
from clawfree.recognition.holes import find_hole, is_perfect_in_class
from clawfree.recognition.patterns import find_class_violation
from clawfree.structure.c5 import classify_c5
from clawfree.structure.c7 import classify_c7, validate_c7_claims
from clawfree.structure.claims import validate_claims
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

    from clawfree.coloring.constants import SolverOptions
    from clawfree.graph.models import Graph
    from clawfree.structure.claims import Violation

__all__ = ("color_class_graph",)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()

#: X sets with at least this many vertices are big.
_BIG = 3


def _check_violations(stage: str, violations: Sequence[Violation]) -> None:
    if violations:
        raise StructureViolationError(
            stage,
            f"{len(violations)} structural facts fail, first {violations[0]}",
            vertices=violations[0].vertices,
            violations=[v.to_dict() for v in violations],
        )


class _Pipeline:
    """Colors class members while counting how each atom was handled."""

    def __init__(self, options: SolverOptions) -> None:
        self.options = options
        self.stages: collections.Counter[Stage] = collections.Counter()

    def exact(self, g: Graph) -> Coloring:
        return exact_color(g, node_budget=self.options.node_budget)

    def color_graph(self, g: Graph) -> Coloring:
        """Color each component and put the colorings side by side."""
        mapping: dict[int, int] = {}

        for part in components(g):
            kept = bits.members(part)
            coloring = self.color_connected(induced_subgraph(g, kept))
            mapping |= {v: coloring[k] for k, v in enumerate(kept)}

        return Coloring.from_mapping(mapping, g.vertex_count)

    def color_connected(self, g: Graph) -> Coloring:
        tree = decompose(g, scan_limit=self.options.cutset_scan_limit)
        atoms = [induced_subgraph(g, leaf.vertices) for leaf in tree.leaves()]

        return recombine(tree, [self.color_atom(atom) for atom in atoms])

    def color_atom(self, g: Graph) -> Coloring:
        stage, coloring = self._color_atom(g)
        self.stages[stage] += 1
        _log.debug("Colored atom.", stage=str(stage), n=g.vertex_count, colors=coloring.color_count)

        return coloring

    def _color_atom(self, g: Graph) -> tuple[Stage, Coloring]:  # noqa: PLR0911
        if g.vertex_count <= 1:
            return Stage.TRIVIAL, Coloring((0,) * g.vertex_count)

        if stability_number(g).value <= 2:  # noqa: PLR2004
            return Stage.ALPHA2, color_alpha2(g)

        if is_perfect_in_class(g, assume_valid=True):
            coloring = self.exact(g)
            omega = clique_number(g).value

            if coloring.color_count != omega:
                raise StructureViolationError(
                    "perfect",
                    f"perfect atom needs {coloring.color_count} colors but its clique number is "
                    f"{omega}",
                    vertices=g.origin,
                )

            return Stage.PERFECT, coloring

        if (c7 := find_hole(g, 7)) is not None:
            if self.options.strict:
                _check_violations("c7", validate_c7_claims(g, classify_c7(g, c7)))

            return Stage.C7, self.exact(g)

        c5 = find_hole(g, 5)

        if c5 is None:
            raise StructureViolationError("c5", "imperfect atom without a 5-hole or a 7-hole")

        structure = classify_c5(g, c5)

        if self.options.strict:
            _check_violations("c5", validate_claims(g, structure))

        if structure.r:
            return Stage.R_NONEMPTY, self.exact(g)

        if clique_number(g).value < OMEGA_THRESHOLD:
            return Stage.SMALL_OMEGA, self.exact(g)

        low = next((v for v in g.vertices if g.degree(v) <= DEGREE_THRESHOLD), None)

        if low is not None:
            return Stage.LOW_DEGREE, self._color_around(g, low)

        big = tuple(i for i, part in enumerate(structure.x) if len(part) >= _BIG)
        anchor = x_anchor(structure)

        if (
            len(big) != _BIG
            or any(part and len(part) < _BIG for part in structure.x)
            or anchor is None
            or set(big) != {anchor, (anchor + 1) % 5, (anchor + 3) % 5}
        ):
            raise StructureViolationError(
                "k_colorable",
                f"expected three big X sets at positions i, i+1, i+3; got sizes "
                f"{list(structure.x_sizes())}",
                vertices=structure.c5,
            )

        return Stage.K_COLORABLE, color_k_colorable_case(g, structure)

    def _color_around(self, g: Graph, v: int) -> Coloring:
        """Color the graph without 'v', then give 'v' the smallest color its neighbours miss."""
        kept = bits.members(g.full_mask & ~(1 << v))
        rest = self.color_graph(induced_subgraph(g, kept)).normalized()
        mapping = {u: rest[k] for k, u in enumerate(kept)}
        taken = {mapping[u] for u in bits.iter_bits(g.neighbors(v))}
        mapping[v] = next(c for c in range(rest.color_count + 1) if c not in taken)

        if mapping[v] == rest.color_count and rest.color_count >= clique_number(g).value:
            raise StructureViolationError(
                "low_degree",
                f"vertex {v} needs color {mapping[v]} beyond the clique number",
                vertices=(v,),
            )

        return Coloring.from_mapping(mapping, g.vertex_count)


def color_class_graph(
    g: Graph,
    options: SolverOptions = DEFAULT_OPTIONS,
    *,
    stages: collections.Counter[Stage] | None = None,
) -> Coloring:
    """Color a class member with the fewest possible colors.

    Parameters
    ----------
    g : Graph
        A graph without claws, four pairwise nonadjacent vertices, 5-wheels, C5-twins, P5-twins
        and K5 minus an edge.
    options : SolverOptions, optional
        The tunables of the exact solver, the claim checks and the cutset scan.
    stages : collections.Counter[Stage] | None, optional
        If given, the number of atoms colored by each rule is added to it.

    Returns
    -------
    Coloring
        An optimal proper coloring.

    Raises
    ------
    NotInClassError
        Raised if 'g' contains one of the forbidden induced subgraphs.
    StructureViolationError
        Raised if an atom breaks a structural fact of class members.
    BudgetExceededError
        Raised if an exact coloring step runs out of its node budget.

    """
    if (witness := find_class_violation(g)) is not None:
        raise NotInClassError(str(witness.kind), witness.vertices)

    pipeline = _Pipeline(options)
    coloring = pipeline.color_graph(g)
    coloring.verify(g)

    _log.debug(
        "Colored class member.",
        n=g.vertex_count,
        colors=coloring.color_count,
        stages={str(k): n for k, n in sorted(pipeline.stages.items())},
    )

    if stages is not None:
        stages.update(pipeline.stages)

    return coloring
