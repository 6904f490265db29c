"""Reading and writing graphs in DIMACS and edge-list formats.

DIMACS files are 1-indexed and edge-list files are 0-indexed; graphs are always 0-indexed once
read.
"""

from __future__ import annotations

import pathlib
import typing

import structlog

from clawfree.core.exceptions import GraphFormatError, InputError
from clawfree.graph.enum import GraphFormat
from clawfree.graph.models import Graph

if typing.TYPE_CHECKING:
    from collections.abc import Iterator

    from clawfree.util.typing import Edge

__all__ = (
    "format_for_path",
    "load_graph",
    "read_graph",
    "save_graph",
    "write_graph",
)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()

#: File suffixes read as DIMACS; everything else is read as an edge list.
DIMACS_SUFFIXES: frozenset[str] = frozenset({".col", ".dimacs"})


def _lines(data: bytes | str) -> Iterator[tuple[int, list[str]]]:
    """Yield the 1-based line number and whitespace-separated fields of each non-blank line."""
    text = data.decode() if isinstance(data, bytes) else data

    for number, line in enumerate(text.splitlines(), start=1):
        fields = line.split()

        if fields:
            yield number, fields


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer; got {token!r}", line) from None


class _EdgeCollector:
    """Collect edges, merging duplicates with a warning and rejecting loops."""

    def __init__(self, vertex_count: int, offset: int) -> None:
        self.vertex_count = vertex_count
        self.offset = offset
        self.edges: dict[Edge, int] = {}

    def add(self, u_token: str, v_token: str, line: int) -> None:
        u = _int(u_token, line) - self.offset
        v = _int(v_token, line) - self.offset

        for vertex in (u, v):
            if not 0 <= vertex < self.vertex_count:
                raise GraphFormatError(
                    f"vertex {vertex + self.offset} is outside "
                    f"{self.offset}..{self.vertex_count - 1 + self.offset}",
                    line,
                )

        if u == v:
            raise GraphFormatError(f"loop at vertex {u + self.offset}", line)

        edge = (min(u, v), max(u, v))

        if edge in self.edges:
            _log.warning(
                "Ignoring duplicate edge.",
                line=line,
                edge=[u + self.offset, v + self.offset],
                first_line=self.edges[edge],
            )
            return

        self.edges[edge] = line

    def graph(self) -> Graph:
        return Graph(self.vertex_count, self.edges)


def _read_dimacs(data: bytes | str) -> Graph:
    collector: _EdgeCollector | None = None
    declared_edges = 0

    for line, fields in _lines(data):
        match fields:
            case ["c", *_]:
                continue
            case ["p", ("edge" | "col"), n, m]:
                if collector is not None:
                    raise GraphFormatError("more than one problem line", line)

                vertex_count = _int(n, line)

                if vertex_count < 0:
                    raise GraphFormatError(f"negative vertex count {vertex_count}", line)

                collector = _EdgeCollector(vertex_count, offset=1)
                declared_edges = _int(m, line)
            case ["p", kind, _, _]:
                raise GraphFormatError(f"problem format {kind!r} is not edge or col", line)
            case ["p", *_]:
                raise GraphFormatError("malformed problem line; expected 'p edge <n> <m>'", line)
            case ["e", u, v]:
                if collector is None:
                    raise GraphFormatError("edge before the problem line", line)

                collector.add(u, v, line)
            case _:
                raise GraphFormatError(f"unrecognized line {" ".join(fields)!r}", line)

    if collector is None:
        raise GraphFormatError("missing problem line 'p edge <n> <m>'")

    if len(collector.edges) != declared_edges:
        _log.warning(
            "Edge count differs from the problem line.",
            declared=declared_edges,
            found=len(collector.edges),
        )

    return collector.graph()


def _read_edgelist(data: bytes | str) -> Graph:
    text = data.decode() if isinstance(data, bytes) else data
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    collector: _EdgeCollector | None = None

    for line, fields in _lines(stripped):
        if collector is None:
            if len(fields) != 1:
                raise GraphFormatError("first line must hold the vertex count", line)

            vertex_count = _int(fields[0], line)

            if vertex_count < 0:
                raise GraphFormatError(f"negative vertex count {vertex_count}", line)

            collector = _EdgeCollector(vertex_count, offset=0)
            continue

        if len(fields) != 2:  # noqa: PLR2004
            raise GraphFormatError("expected an edge '<u> <v>'", line)

        collector.add(fields[0], fields[1], line)

    if collector is None:
        raise GraphFormatError("missing vertex count")

    return collector.graph()


def read_graph(data: bytes | str, fmt: GraphFormat | str = GraphFormat.DIMACS) -> Graph:
    """Parse a graph.

    Parameters
    ----------
    data : bytes | str
        The file contents.
    fmt : GraphFormat | str, optional
        The format of 'data'; DIMACS by default.

    Returns
    -------
    Graph
        The parsed graph, 0-indexed.

    Raises
    ------
    GraphFormatError
        Raised on a malformed header, a vertex out of range or a loop.

    """
    try:
        fmt = GraphFormat(fmt)
    except ValueError:
        raise InputError(f"unknown graph format {fmt!r}") from None

    try:
        if fmt is GraphFormat.DIMACS:
            return _read_dimacs(data)

        return _read_edgelist(data)
    except UnicodeDecodeError as e:
        raise GraphFormatError(f"input is not text: {e}") from e


def write_graph(g: Graph, fmt: GraphFormat | str = GraphFormat.DIMACS) -> bytes:
    """Serialize a graph so that 'read_graph' gives back the same labelled graph."""
    fmt = GraphFormat(fmt)

    if fmt is GraphFormat.DIMACS:
        lines = [f"p edge {g.vertex_count} {g.edge_count}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    else:
        lines = [str(g.vertex_count)]
        lines += [f"{u} {v}" for u, v in g.edges()]

    return ("\n".join(lines) + "\n").encode()


def format_for_path(path: pathlib.Path | str) -> GraphFormat:
    """Pick the graph format from a file suffix."""
    suffix = pathlib.Path(path).suffix.lower()
    return GraphFormat.DIMACS if suffix in DIMACS_SUFFIXES else GraphFormat.EDGELIST


def load_graph(path: pathlib.Path | str, fmt: GraphFormat | str | None = None) -> Graph:
    """Read a graph file, choosing the format from its suffix unless one is given.

    Raises
    ------
    InputError
        Raised if the file cannot be read.
    GraphFormatError
        Raised if the file cannot be parsed.

    """
    path = pathlib.Path(path)

    try:
        data = path.read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from e

    try:
        return read_graph(data, fmt or format_for_path(path))
    except GraphFormatError as e:
        raise GraphFormatError(f"{path}: {e.message}") from e


def save_graph(
    g: Graph,
    path: pathlib.Path | str,
    fmt: GraphFormat | str | None = None,
) -> pathlib.Path:
    """Write a graph file, choosing the format from its suffix unless one is given."""
    path = pathlib.Path(path)
    path.write_bytes(write_graph(g, fmt or format_for_path(path)))
    return path
