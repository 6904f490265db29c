"""Recognition of class members, exact clique and stability numbers, and hole detection."""

from __future__ import annotations

from clawfree.recognition.cliques import Certificate, clique_number, stability_number
from clawfree.recognition.enum import ForbiddenKind
from clawfree.recognition.holes import find_hole, is_perfect_in_class
from clawfree.recognition.patterns import (
    PATTERNS,
    Witness,
    find_class_violation,
    find_forbidden,
    in_class,
)

__all__ = (
    "PATTERNS",
    "Certificate",
    "ForbiddenKind",
    "Witness",
    "clique_number",
    "find_class_violation",
    "find_forbidden",
    "find_hole",
    "in_class",
    "is_perfect_in_class",
    "stability_number",
)
