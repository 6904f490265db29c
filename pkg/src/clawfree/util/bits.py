"""Helpers for vertex sets stored as integer bitsets."""

from __future__ import annotations

import typing

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    from clawfree.util.typing import Bitset

__all__ = (
    "bit",
    "first",
    "iter_bits",
    "members",
    "pack",
    "size",
)


def bit(v: int) -> Bitset:
    """Return the singleton set ``{v}``."""
    return 1 << v


def pack(vertices: Iterable[int]) -> Bitset:
    """Pack an iterable of vertices into a bitset."""
    mask = 0

    for v in vertices:
        mask |= 1 << v

    return mask


def iter_bits(mask: Bitset) -> Iterator[int]:
    """Yield the members of a bitset in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: Bitset) -> list[int]:
    """Return the members of a bitset as a sorted list."""
    return list(iter_bits(mask))


def first(mask: Bitset) -> int:
    """Return the smallest member of a non-empty bitset.

    Raises
    ------
    ValueError
        Raised if the set is empty.

    """
    if not mask:
        raise ValueError("empty vertex set has no smallest member")

    return (mask & -mask).bit_length() - 1


def size(mask: Bitset) -> int:
    """Return the number of members of a bitset."""
    return mask.bit_count()
