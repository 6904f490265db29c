"""Brute-force reference answers, named graphs and generators of class members for testing."""

from __future__ import annotations

from clawfree.oracle.brute import (
    brute_chromatic,
    brute_clique_cutset,
    brute_clique_number,
    brute_edge_chromatic,
    brute_forbidden,
    brute_list_color,
    brute_matching_number,
    brute_stability_number,
    line_graph_obstruction,
)
from clawfree.oracle.catalog import FOUR_VERTEX_GRAPHS, NON_LINE_GRAPHS, co_petersen, named
from clawfree.oracle.enum import Strategy
from clawfree.oracle.generate import C5Layout, GenSpec, build_c5_instance, generate

__all__ = (
    "FOUR_VERTEX_GRAPHS",
    "NON_LINE_GRAPHS",
    "C5Layout",
    "GenSpec",
    "Strategy",
    "brute_chromatic",
    "brute_clique_cutset",
    "brute_clique_number",
    "brute_edge_chromatic",
    "brute_forbidden",
    "brute_list_color",
    "brute_matching_number",
    "brute_stability_number",
    "build_c5_instance",
    "co_petersen",
    "generate",
    "line_graph_obstruction",
    "named",
)
