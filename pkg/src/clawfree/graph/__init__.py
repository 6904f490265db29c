"""Graph representation, elementary operations, maximum matching and file I/O."""

from __future__ import annotations

from clawfree.graph.enum import Adjacency, GraphFormat
from clawfree.graph.io import load_graph, read_graph, save_graph, write_graph
from clawfree.graph.matching import max_matching
from clawfree.graph.models import Coloring, Graph, Matching
from clawfree.graph.operations import (
    complement,
    components,
    induced_subgraph,
    is_clique,
    is_connected,
    is_stable,
    join_cojoin,
    line_graph,
)

__all__ = (
    "Adjacency",
    "Coloring",
    "Graph",
    "GraphFormat",
    "Matching",
    "complement",
    "components",
    "induced_subgraph",
    "is_clique",
    "is_connected",
    "is_stable",
    "join_cojoin",
    "line_graph",
    "load_graph",
    "max_matching",
    "read_graph",
    "save_graph",
    "write_graph",
)
