"""Enums for recognition."""

from __future__ import annotations

import enum

__all__ = ("ForbiddenKind",)


class ForbiddenKind(enum.StrEnum):
    """The six induced subgraphs that members of the class avoid."""

    CLAW = "claw"
    FOUR_K1 = "four_K1"
    K5_MINUS_E = "K5_minus_e"
    FIVE_WHEEL = "five_wheel"
    C5_TWIN = "C5_twin"
    P5_TWIN = "P5_twin"
