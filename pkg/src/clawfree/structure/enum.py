"""Enums for hole structure."""

from __future__ import annotations

import enum

__all__ = ("Claim",)


class Claim(enum.StrEnum):
    """Structural facts that hold around a hole of every connected class member.

    Around a 5-hole, with positions modulo 5, ``X[i]``, ``Y[i]`` and ``R`` as in 'C5Structure'.
    """

    #: Every ``Y[i]`` has at most one vertex.
    Y_SETS_HAVE_AT_MOST_ONE_VERTEX = "y_sets_have_at_most_one_vertex"

    #: No edge between ``Y[i]`` and ``Y[i+1]``.
    CONSECUTIVE_Y_SETS_ARE_COJOINED = "consecutive_y_sets_are_cojoined"

    #: ``X[i]`` is joined to ``Y[i]`` and ``Y[i+3]``.
    X_JOINED_TO_Y_I_AND_Y_I_PLUS_3 = "x_joined_to_y_i_and_y_i_plus_3"

    #: If ``X[i]`` is non-empty, the vertices of ``Y[i]`` and ``Y[i+3]`` are adjacent.
    OPPOSITE_Y_ADJACENT_WHEN_X_NONEMPTY = "opposite_y_adjacent_when_x_nonempty"

    #: No edge between ``X[i]`` and ``Y[i+1]``, ``Y[i+2]`` or ``Y[i+4]``.
    X_COJOINED_TO_OTHER_Y = "x_cojoined_to_other_y"

    #: No edge between R and Y.
    R_COJOINED_TO_Y = "r_cojoined_to_y"

    #: A non-empty R comes with a non-empty X. Checked on connected graphs only.
    R_NONEMPTY_IMPLIES_X_NONEMPTY = "r_nonempty_implies_x_nonempty"

    X_SETS_ARE_CLIQUES = "x_sets_are_cliques"
    R_IS_A_CLIQUE = "r_is_a_clique"
    R_JOINED_TO_X = "r_joined_to_x"

    #: A non-empty R keeps every ``X[i]`` at two vertices or fewer.
    R_LIMITS_X_SIZES = "r_limits_x_sizes"

    #: A vertex of ``X[i]`` has at most one neighbour in each other ``X[j]``.
    ONE_NEIGHBOUR_PER_OTHER_X = "one_neighbour_per_other_x"

    #: The neighbours of a vertex of ``X[i]`` outside ``X[i]`` but inside X are pairwise adjacent.
    NO_NONADJACENT_NEIGHBOURS_IN_OTHER_X = "no_nonadjacent_neighbours_in_other_x"

    #: With X non-empty, either R has at most two vertices or X is a clique cutset.
    SMALL_R_OR_X_CLIQUE_CUTSET = "small_r_or_x_clique_cutset"

    #: A non-empty R means at most 22 vertices or a clique cutset. Checked on connected graphs only.
    R_BOUNDS_ORDER_OR_CLIQUE_CUTSET = "r_bounds_order_or_clique_cutset"

    #: Among three consecutive non-empty X sets, one with three or more vertices leaves the other
    #: two with one vertex each.
    BIG_X_FORCES_SINGLETON_FLANKS = "big_x_forces_singleton_flanks"

    #: Around a 7-hole every ``Y[i]`` and ``Z[i]`` has at most one vertex.
    C7_SETS_HAVE_AT_MOST_ONE_VERTEX = "c7_sets_have_at_most_one_vertex"

    #: A graph with a 7-hole has at most 21 vertices.
    C7_BOUNDS_ORDER = "c7_bounds_order"
