"""The vertex partitions around 5-holes and 7-holes, and the facts they satisfy."""

from __future__ import annotations

from clawfree.structure.c5 import C5Structure, classify_c5, hole_positions, k_vertex_profile
from clawfree.structure.c7 import C7_ORDER_BOUND, C7Structure, classify_c7, validate_c7_claims
from clawfree.structure.claims import R_ORDER_BOUND, Violation, validate_claims
from clawfree.structure.enum import Claim

__all__ = (
    "C7_ORDER_BOUND",
    "R_ORDER_BOUND",
    "C5Structure",
    "C7Structure",
    "Claim",
    "Violation",
    "classify_c5",
    "classify_c7",
    "hole_positions",
    "k_vertex_profile",
    "validate_c7_claims",
    "validate_claims",
)
