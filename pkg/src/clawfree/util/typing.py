"""Common types and type aliases used throughout the library."""

from __future__ import annotations

import typing
from abc import abstractmethod
from typing import Protocol

if typing.TYPE_CHECKING:
    from collections.abc import Callable
    from typing import Any

__all__ = (
    "Bitset",
    "Comparable",
    "ConfigProcessor",
    "ConfigValue",
    "Edge",
    "ExitCode",
    "Vertex",
)

#: A value that can be passed to a ConfigParser.
type ConfigValue = str | list[str] | dict[str, Any]

#: A function that can be used for parsing configuration values.
type ConfigProcessor[T] = Callable[[ConfigValue], T]

#: The value returned when the program exits.
type ExitCode = int | None

#: A vertex index; vertices of a graph are always ``0..n-1``.
type Vertex = int

#: An edge as an ordered pair ``(u, v)`` with ``u < v``.
type Edge = tuple[int, int]

#: A set of vertices packed into an integer, bit ``v`` set when ``v`` is a member.
type Bitset = int


class Comparable[T](Protocol):
    """Protocol for annotating comparable types."""

    @abstractmethod
    def __lt__(self: T, other: T) -> bool:  # noqa: D105
        pass
