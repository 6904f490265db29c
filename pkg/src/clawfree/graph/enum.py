"""Enums for graphs and graph files."""

from __future__ import annotations

import enum

__all__ = (
    "Adjacency",
    "GraphFormat",
)


class Adjacency(enum.StrEnum):
    """How two disjoint vertex sets are connected."""

    #: Every pair is adjacent.
    JOIN = "join"

    #: No pair is adjacent. Reported when either set is empty.
    COJOIN = "cojoin"

    #: Some pairs are adjacent and some are not.
    MIXED = "mixed"


class GraphFormat(enum.StrEnum):
    """Supported graph file formats."""

    #: ``p edge <n> <m>`` followed by ``e <u> <v>`` lines, 1-indexed.
    DIMACS = "dimacs"

    #: A vertex count line followed by ``<u> <v>`` lines, 0-indexed.
    EDGELIST = "edgelist"
