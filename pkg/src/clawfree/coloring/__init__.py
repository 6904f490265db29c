"""Vertex coloring engines and the optimal coloring of class members."""

from __future__ import annotations

from clawfree.coloring.alpha2 import color_alpha2
from clawfree.coloring.constants import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_OPTIONS,
    DEGREE_THRESHOLD,
    OMEGA_THRESHOLD,
    SolverOptions,
)
from clawfree.coloring.enum import Stage
from clawfree.coloring.exact import exact_color
from clawfree.coloring.lemmas import (
    StableSet,
    color_k_colorable_case,
    color_three_xi_case,
    good_stable_set,
    x_anchor,
)
from clawfree.coloring.lists import ListInstance, l_color_three_cliques
from clawfree.coloring.pipeline import color_class_graph

__all__ = (
    "DEFAULT_NODE_BUDGET",
    "DEFAULT_OPTIONS",
    "DEGREE_THRESHOLD",
    "OMEGA_THRESHOLD",
    "ListInstance",
    "SolverOptions",
    "StableSet",
    "Stage",
    "color_alpha2",
    "color_class_graph",
    "color_k_colorable_case",
    "color_three_xi_case",
    "exact_color",
    "good_stable_set",
    "l_color_three_cliques",
    "x_anchor",
)
