"""Immutable graphs, vertex colorings and matchings."""

from __future__ import annotations

import dataclasses
import typing

from clawfree.core.exceptions import ColoringError, InputError
from clawfree.util import bits
from clawfree.util.logging import Canonical

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Mapping, Sequence
    from typing import Any

    from clawfree.util.typing import Bitset, Edge

__all__ = (
    "Coloring",
    "Graph",
    "Matching",
)


class Graph(Canonical):
    """A simple undirected graph on the vertices ``0..n-1``.

    Adjacency is stored as one neighbourhood bitset per vertex. Instances never change after
    construction, so they are safe to share between threads and usable as dictionary keys.

    Parameters
    ----------
    vertex_count : int
        The number of vertices.
    edges : Iterable[tuple[int, int]], optional
        The edges of the graph. Repeated edges are merged.
    labels : Sequence[str] | None, optional
        A display label for every vertex.
    origin : Sequence[int] | None, optional
        For a graph derived from another one, the vertex of the parent graph that each vertex
        stands for. Defaults to the identity.

    Raises
    ------
    InputError
        Raised if an edge is a loop or names a vertex outside ``0..n-1``.

    """

    __slots__ = (
        "_adj",
        "_edge_count",
        "_labels",
        "_origin",
    )

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[tuple[int, int]] = (),
        *,
        labels: Sequence[str] | None = None,
        origin: Sequence[int] | None = None,
    ) -> None:
        if vertex_count < 0:
            raise InputError(f"vertex count must be non-negative; got {vertex_count}")

        adj = [0] * vertex_count

        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(f"edge ({u}, {v}) names a vertex outside 0..{vertex_count - 1}")

            if u == v:
                raise InputError(f"loop at vertex {u}; only simple graphs are supported")

            adj[u] |= 1 << v
            adj[v] |= 1 << u

        self._init(tuple(adj), labels, origin)

    def _init(
        self,
        adj: tuple[Bitset, ...],
        labels: Sequence[str] | None,
        origin: Sequence[int] | None,
    ) -> None:
        n = len(adj)

        if labels is not None and len(labels) != n:
            raise InputError(f"expected {n} labels; got {len(labels)}")

        if origin is not None and len(origin) != n:
            raise InputError(f"expected {n} origin vertices; got {len(origin)}")

        self._adj = adj
        self._edge_count = sum(a.bit_count() for a in adj) // 2
        self._labels: tuple[str, ...] | None = tuple(labels) if labels is not None else None
        self._origin: tuple[int, ...] = tuple(origin) if origin is not None else tuple(range(n))

    @classmethod
    def from_adjacency(
        cls,
        adjacency: Sequence[Bitset],
        *,
        labels: Sequence[str] | None = None,
        origin: Sequence[int] | None = None,
    ) -> Graph:
        """Build a graph directly from neighbourhood bitsets.

        Raises
        ------
        InputError
            Raised if the bitsets are not symmetric, contain a loop or reach past the last vertex.

        """
        n = len(adjacency)
        full = (1 << n) - 1

        for v, nbrs in enumerate(adjacency):
            if nbrs & ~full or nbrs >> v & 1:
                raise InputError(f"vertex {v} has an invalid neighbourhood")

            for u in bits.iter_bits(nbrs):
                if not adjacency[u] >> v & 1:
                    raise InputError(f"adjacency is not symmetric at ({v}, {u})")

        graph = cls.__new__(cls)
        graph._init(tuple(adjacency), labels, origin)  # noqa: SLF001
        return graph

    @property
    def vertex_count(self) -> int:
        """Get the number of vertices."""
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        """Get the number of edges."""
        return self._edge_count

    @property
    def adjacency(self) -> tuple[Bitset, ...]:
        """Get the neighbourhood bitset of every vertex."""
        return self._adj

    @property
    def vertices(self) -> range:
        """Get the vertex indices."""
        return range(len(self._adj))

    @property
    def full_mask(self) -> Bitset:
        """Get the bitset containing every vertex."""
        return (1 << len(self._adj)) - 1

    @property
    def labels(self) -> tuple[str, ...] | None:
        """Get the vertex labels, if the graph has any."""
        return self._labels

    @property
    def origin(self) -> tuple[int, ...]:
        """Get the parent-graph vertex for every vertex."""
        return self._origin

    def label(self, v: int) -> str:
        """Get the display label of a vertex, falling back to its index."""
        return self._labels[v] if self._labels is not None else str(v)

    def neighbors(self, v: int) -> Bitset:
        """Get the neighbourhood of a vertex as a bitset."""
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether two vertices are adjacent."""
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        """Get the number of neighbours of a vertex."""
        return self._adj[v].bit_count()

    def max_degree(self) -> int:
        """Get the largest vertex degree, or 0 for a graph without vertices."""
        return max((a.bit_count() for a in self._adj), default=0)

    def edges(self) -> Iterator[Edge]:
        """Yield every edge ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self._adj):
            for v in bits.iter_bits(nbrs >> (u + 1)):
                yield (u, u + 1 + v)

    def __len__(self) -> int:
        """Get the number of vertices."""
        return len(self._adj)

    def __eq__(self, other: object) -> bool:
        """Compare graphs by vertex count and adjacency; labels and origin are ignored."""
        if not isinstance(other, Graph):
            return NotImplemented

        return self._adj == other._adj

    def __hash__(self) -> int:
        """Hash the adjacency."""
        return hash(self._adj)

    def __repr__(self) -> str:
        """Get a short description of the graph."""
        return f"<{type(self).__qualname__} n={self.vertex_count} m={self.edge_count}>"

    @property
    def __canonical__(self) -> dict[str, Any]:
        """Get the vertex and edge counts for logging."""
        return {"n": self.vertex_count, "m": self.edge_count}


@dataclasses.dataclass(frozen=True, slots=True)
class Coloring:
    """A color for every vertex of a graph.

    Colors are non-negative integers; ``colors[v]`` is the color of vertex ``v``.
    """

    colors: tuple[int, ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], vertex_count: int) -> Coloring:
        """Build a coloring from a vertex to color mapping.

        Raises
        ------
        ColoringError
            Raised if a vertex is missing from the mapping.

        """
        missing = [v for v in range(vertex_count) if v not in mapping]

        if missing:
            raise ColoringError(f"vertices without a color: {missing}")

        return cls(tuple(mapping[v] for v in range(vertex_count)))

    @property
    def color_count(self) -> int:
        """Get the number of distinct colors used."""
        return len(set(self.colors))

    def __len__(self) -> int:
        """Get the number of colored vertices."""
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        """Get the color of a vertex."""
        return self.colors[v]

    def conflict(self, g: Graph) -> Edge | None:
        """Get the first edge of 'g' whose endpoints share a color, if any."""
        return next((e for e in g.edges() if self.colors[e[0]] == self.colors[e[1]]), None)

    def is_proper(self, g: Graph) -> bool:
        """Check whether this colors every vertex of 'g' with adjacent vertices differing."""
        return len(self.colors) == g.vertex_count and self.conflict(g) is None

    def verify(self, g: Graph) -> None:
        """Check that this is a proper coloring of 'g'.

        Raises
        ------
        ColoringError
            Raised if the coloring has the wrong length, uses a negative color or gives two
            adjacent vertices the same color.

        """
        if len(self.colors) != g.vertex_count:
            raise ColoringError(
                f"coloring has {len(self.colors)} entries but the graph has {g.vertex_count} "
                "vertices",
            )

        if any(c < 0 for c in self.colors):
            raise ColoringError("colors must be non-negative integers")

        if edge := self.conflict(g):
            raise ColoringError(
                f"adjacent vertices {edge[0]} and {edge[1]} share color {self.colors[edge[0]]}",
                edge=edge,
            )

    def normalized(self) -> Coloring:
        """Relabel colors to ``0..k-1`` in order of first appearance."""
        relabel: dict[int, int] = {}
        return Coloring(tuple(relabel.setdefault(c, len(relabel)) for c in self.colors))

    def classes(self) -> list[list[int]]:
        """Get the color classes, ordered by their smallest vertex."""
        by_color: dict[int, list[int]] = {}

        for v, c in enumerate(self.colors):
            by_color.setdefault(c, []).append(v)

        return list(by_color.values())

    def as_list(self) -> list[int]:
        """Get the colors as a list indexed by vertex."""
        return list(self.colors)


@dataclasses.dataclass(frozen=True, slots=True)
class Matching:
    """A set of pairwise disjoint edges, each stored as ``(u, v)`` with ``u < v``."""

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        """Store the edges in canonical order."""
        object.__setattr__(
            self,
            "edges",
            tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges)),
        )

    @property
    def size(self) -> int:
        """Get the number of edges."""
        return len(self.edges)

    def __len__(self) -> int:
        """Get the number of edges."""
        return len(self.edges)

    @property
    def covered(self) -> Bitset:
        """Get the set of matched vertices."""
        return bits.pack(v for e in self.edges for v in e)

    def mate(self, v: int) -> int | None:
        """Get the vertex matched to 'v', if any."""
        for a, b in self.edges:
            if a == v:
                return b

            if b == v:
                return a

        return None

    def verify(self, g: Graph) -> None:
        """Check that this is a matching of 'g'.

        Raises
        ------
        InputError
            Raised if a pair is not an edge of 'g' or two pairs share a vertex.

        """
        seen = 0

        for u, v in self.edges:
            if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count) or not g.has_edge(u, v):
                raise InputError(f"({u}, {v}) is not an edge of the graph")

            pair = bits.pack((u, v))

            if seen & pair:
                raise InputError(f"edge ({u}, {v}) shares a vertex with another matched edge")

            seen |= pair
