"""Enums for coloring."""

from __future__ import annotations

import enum

__all__ = ("Stage",)


class Stage(enum.StrEnum):
    """The way an atom was colored by the class coloring pipeline."""

    #: At most one vertex.
    TRIVIAL = "trivial"

    #: No three pairwise nonadjacent vertices; colored from a complement matching.
    ALPHA2 = "alpha2"

    #: No 5-hole and no 7-hole, so perfect; colored exactly with the clique number.
    PERFECT = "perfect"

    #: Contains a 7-hole, so at most 21 vertices; colored exactly.
    C7 = "c7"

    #: Has vertices away from its 5-hole, so at most 22 vertices; colored exactly.
    R_NONEMPTY = "r_nonempty"

    #: Clique number below the threshold; colored exactly.
    SMALL_OMEGA = "small_omega"

    #: A low degree vertex was set aside and colored last.
    LOW_DEGREE = "low_degree"

    #: Colored with the clique number from the 5-hole partition.
    K_COLORABLE = "k_colorable"
