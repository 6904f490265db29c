"""Exceptions for errors that occur while reading, recognizing, or coloring graphs."""

from __future__ import annotations

import enum
import os
import typing

if typing.TYPE_CHECKING:
    from collections.abc import Iterable
    from typing import Any

    from clawfree.util.typing import ExitCode

__all__ = (
    "BudgetExceededError",
    "ClawfreeError",
    "ColoringError",
    "ConfigurationError",
    "ExitStatus",
    "GraphFormatError",
    "InputError",
    "InternalError",
    "MatchingTooLargeError",
    "NotInClassError",
    "PreconditionError",
    "RequiredValueError",
    "SizeGuardError",
    "StructureViolationError",
)


class ExitStatus(enum.IntEnum):
    """Exit codes returned by the command-line interface."""

    OK = 0
    NOT_IN_CLASS = 1
    INPUT_ERROR = 2
    RESOURCE_ERROR = 3


class ClawfreeError(Exception):
    """A base class used for all errors raised by the library.

    Parameters
    ----------
    message : str
        The message to log out to the user that describes the error.
    exit_code : ExitCode, optional
        The integer return code to return when the program exits.

    Attributes
    ----------
    message : str
        The message that will be logged to the user describing the error.
    exit_code : ExitCode
        An integer return code that should be returned when the program exits.

    """

    def __init__(self, message: str, exit_code: ExitCode = None) -> None:
        super().__init__(message)
        self.message: str = message
        self.exit_code: ExitCode = exit_code

    def __reduce__(self) -> tuple[type[ClawfreeError], tuple[Any, ...]]:
        """Allow instances of this exception to be serialized.

        Returns
        -------
        tuple[T, tuple[Any, ...]]
            A tuple containing the class of this specific instance and another tuple containing all
            attributes that can be serialized.

        """
        return (type(self), tuple(vars(self).values()))


class ConfigurationError(ClawfreeError):
    """A base class used for all errors occurring from misconfiguration.

    Parameters
    ----------
    message : str
        The message to log that describes the configuration error.

    """

    def __init__(self, message: str) -> None:
        super().__init__(message, ExitStatus.INPUT_ERROR)

    def __reduce__(self) -> tuple[type[ClawfreeError], tuple[Any, ...]]:
        """Serialize the error using only the message."""
        return (type(self), (self.message,))


class RequiredValueError(ConfigurationError):
    """Raised when a required configuration value is missing.

    Parameters
    ----------
    name : str
        The name of the missing configuration value.
    namespace : str
        The namespace where the configuration value was expected to be found.

    """

    def __init__(self, name: str, namespace: str) -> None:
        super().__init__(
            f"Required configuration value `{name}` is missing from namespace {namespace}.",
        )
        self.name = name
        self.namespace = namespace

    def __reduce__(self) -> tuple[type[ClawfreeError], tuple[Any, ...]]:
        """Serialize the error using the name and namespace."""
        return (type(self), (self.name, self.namespace))


class InputError(ClawfreeError):
    """Raised when the input given to an operation or to the CLI is not acceptable.

    Parameters
    ----------
    message : str
        The message describing what is wrong with the input.

    """

    def __init__(self, message: str) -> None:
        super().__init__(message, ExitStatus.INPUT_ERROR)

    def __reduce__(self) -> tuple[type[ClawfreeError], tuple[Any, ...]]:
        """Serialize the error using only the message."""
        return (type(self), (self.message,))


class GraphFormatError(InputError):
    """Raised when a graph file cannot be parsed.

    Parameters
    ----------
    message : str
        The reason the input was rejected.
    line : int | None, optional
        The 1-based line number on which the problem was found.

    """

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class PreconditionError(InputError):
    """Raised when the precondition of an operation does not hold for its input."""


class ColoringError(InputError):
    """Raised when a coloring is not proper or does not cover the graph.

    Parameters
    ----------
    message : str
        The reason the coloring was rejected.
    edge : tuple[int, int] | None, optional
        An edge whose endpoints received the same color.

    """

    def __init__(self, message: str, edge: tuple[int, int] | None = None) -> None:
        super().__init__(message)
        self.edge = edge


class MatchingTooLargeError(InputError):
    """Raised when a graph has a matching of size four and its chromatic index is not handled.

    Parameters
    ----------
    edges : Iterable[tuple[int, int]]
        Four pairwise disjoint edges of the graph.

    """

    def __init__(self, edges: Iterable[tuple[int, int]]) -> None:
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        super().__init__(f"Graph has a matching of size four: {list(self.edges)}")

    def __reduce__(self) -> tuple[type[ClawfreeError], tuple[Any, ...]]:
        """Serialize the error using the witness edges."""
        return (type(self), (self.edges,))


class NotInClassError(ClawfreeError):
    """Raised when a graph contains one of the forbidden induced subgraphs.

    Parameters
    ----------
    kind : str
        The name of the forbidden subgraph that was found.
    vertices : Iterable[int]
        The vertices inducing the forbidden subgraph.

    """

    def __init__(self, kind: str, vertices: Iterable[int]) -> None:
        self.kind = kind
        self.vertices: tuple[int, ...] = tuple(vertices)
        super().__init__(
            f"Graph contains an induced {kind} on vertices {list(self.vertices)}",
            ExitStatus.NOT_IN_CLASS,
        )

    def __reduce__(self) -> tuple[type[ClawfreeError], tuple[Any, ...]]:
        """Serialize the error using the kind and vertices."""
        return (type(self), (self.kind, self.vertices))


class StructureViolationError(ClawfreeError):
    """Raised when a structural fact that must hold for class members turns out to be false.

    This either means the input slipped past recognition or there is a bug.

    Parameters
    ----------
    stage : str
        The step of the algorithm during which the violation was found.
    message : str
        A description of the violation.
    vertices : Iterable[int], optional
        Vertices witnessing the violation.
    context : Any
        Any extra information relevant to the violation.

    """

    def __init__(
        self,
        stage: str,
        message: str,
        vertices: Iterable[int] = (),
        **context: Any,
    ) -> None:
        super().__init__(f"{stage}: {message}", ExitStatus.NOT_IN_CLASS)
        self.stage = stage
        self.vertices: tuple[int, ...] = tuple(vertices)
        self.context = context

    def __reduce__(self) -> tuple[type[ClawfreeError], tuple[Any, ...]]:
        """Serialize the error without its keyword context."""
        return (type(self), (self.stage, self.message.removeprefix(f"{self.stage}: ")))


class BudgetExceededError(ClawfreeError):
    """Raised when a search runs out of its node budget instead of answering.

    Parameters
    ----------
    message : str
        A description of the search that ran out of budget.
    budget : int
        The budget that was exhausted.

    """

    def __init__(self, message: str, budget: int) -> None:
        super().__init__(message, ExitStatus.RESOURCE_ERROR)
        self.budget = budget

    def __reduce__(self) -> tuple[type[ClawfreeError], tuple[Any, ...]]:
        """Serialize the error using the message and budget."""
        return (type(self), (self.message, self.budget))


class SizeGuardError(BudgetExceededError):
    """Raised when a brute-force oracle is asked to solve an instance above its size guard.

    Parameters
    ----------
    oracle : str
        The name of the oracle.
    size : int
        The size of the rejected instance.
    limit : int
        The largest size the oracle accepts.

    """

    def __init__(self, oracle: str, size: int, limit: int) -> None:
        super().__init__(f"{oracle}: instance size {size} exceeds the guard of {limit}", limit)
        self.oracle = oracle
        self.size = size

    def __reduce__(self) -> tuple[type[ClawfreeError], tuple[Any, ...]]:
        """Serialize the error using the oracle name and sizes."""
        return (type(self), (self.oracle, self.size, self.budget))


class InternalError(ClawfreeError):
    """Raised when an internal consistency check fails.

    Parameters
    ----------
    message : str
        A description of the failed check.

    """

    def __init__(self, message: str) -> None:
        super().__init__(message, os.EX_SOFTWARE)

    def __reduce__(self) -> tuple[type[ClawfreeError], tuple[Any, ...]]:
        """Serialize the error using only the message."""
        return (type(self), (self.message,))
