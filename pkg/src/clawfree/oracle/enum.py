"""Enums for the test graph generator."""

from __future__ import annotations

import enum

__all__ = ("Strategy",)


class Strategy(enum.StrEnum):
    """How the generator produces candidate graphs before filtering them for class membership."""

    #: Every labeled graph on each vertex count, in edge-subset order.
    EXHAUSTIVE_LABELED = "exhaustive_labeled"

    #: Dense random graphs.
    RANDOM_FILTERED = "random_filtered"

    #: A 5-hole with X, Y and R vertices attached around it.
    CONSTRUCTIVE_C5 = "constructive_c5"
