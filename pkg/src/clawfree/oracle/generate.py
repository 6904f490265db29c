"""Deterministic streams of class members for property tests and the ``gen`` command.

Every strategy draws candidates and keeps those that pass 'in_class'. Random strategies use a
private 'random.Random' seeded from the 'GenSpec', so equal specs always yield the same graphs
in the same order.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
import typing

import structlog

from clawfree.core.exceptions import PreconditionError
from clawfree.graph.models import Graph
from clawfree.oracle.enum import Strategy
from clawfree.recognition.patterns import in_class
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence

    from clawfree.util.typing import Edge

__all__ = (
    "EXHAUSTIVE_LIMIT",
    "C5Layout",
    "GenSpec",
    "build_c5_instance",
    "generate",
)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()

#: Largest vertex count the exhaustive strategy enumerates.
EXHAUSTIVE_LIMIT = 7

#: Range of edge probabilities for random candidates; sparse graphs almost never pass the filter.
_DENSITY = (0.4, 1.0)

#: Probability of an edge between two X vertices in different X sets.
_CROSS_EDGE_PROBABILITY = 0.3


@dataclasses.dataclass(frozen=True, slots=True)
class GenSpec:
    """What to generate.

    Parameters
    ----------
    min_n : int
        The smallest vertex count.
    max_n : int
        The largest vertex count.
    seed : int, optional
        The seed of the random strategies.
    strategy : Strategy, optional
        How candidates are produced.
    count : int, optional
        The number of graphs the random strategies yield at most.
    attempts : int, optional
        The random strategies give up after ``count * attempts`` candidates.

    Raises
    ------
    PreconditionError
        Raised if the sizes are out of order or out of range for the strategy.

    """

    min_n: int
    max_n: int
    seed: int = 0
    strategy: Strategy = Strategy.EXHAUSTIVE_LABELED
    count: int = 100
    attempts: int = 50

    def __post_init__(self) -> None:
        object.__setattr__(self, "strategy", Strategy(self.strategy))

        if not 0 <= self.min_n <= self.max_n:
            raise PreconditionError(f"bad size range {self.min_n}..{self.max_n}")

        if self.count < 0 or self.attempts < 1:
            raise PreconditionError("count must be non-negative and attempts positive")

        if self.strategy is Strategy.EXHAUSTIVE_LABELED and self.max_n > EXHAUSTIVE_LIMIT:
            raise PreconditionError(
                f"exhaustive enumeration stops at {EXHAUSTIVE_LIMIT} vertices; got {self.max_n}",
            )

        if self.strategy is Strategy.CONSTRUCTIVE_C5 and self.min_n < 5:  # noqa: PLR2004
            raise PreconditionError(f"a 5-hole needs at least 5 vertices; got {self.min_n}")


@dataclasses.dataclass(frozen=True, slots=True)
class C5Layout:
    """Vertex numbering of a graph grown around the 5-hole ``0-1-2-3-4``.

    X vertices follow the hole in position order, then Y vertices, then R vertices.
    """

    x: tuple[tuple[int, ...], ...]
    y: tuple[tuple[int, ...], ...]
    r: tuple[int, ...]

    @classmethod
    def of(
        cls,
        x_sizes: Sequence[int],
        y_positions: Iterable[int] = (),
        r_size: int = 0,
    ) -> C5Layout:
        """Number the vertices for the given X sizes, Y positions and R size.

        Raises
        ------
        PreconditionError
            Raised if there are not five X sizes, a size is negative or a Y position repeats.

        """
        positions = sorted(y_positions)

        if len(x_sizes) != 5 or min(x_sizes) < 0 or r_size < 0:  # noqa: PLR2004
            raise PreconditionError(f"expected five non-negative X sizes; got {list(x_sizes)}")

        if len(set(positions)) != len(positions) or not set(positions) <= set(range(5)):
            raise PreconditionError(f"Y positions must be distinct in 0..4; got {positions}")

        counter = itertools.count(5)
        x = tuple(tuple(itertools.islice(counter, size)) for size in x_sizes)
        y = tuple((next(counter),) if i in positions else () for i in range(5))
        r = tuple(itertools.islice(counter, r_size))

        return cls(x, y, r)

    @property
    def vertex_count(self) -> int:
        """Get the number of vertices, hole included."""
        return 5 + sum(map(len, self.x)) + sum(map(len, self.y)) + len(self.r)

    def base_edges(self) -> list[Edge]:
        """Get the edges every instance with this layout has.

        X sets are cliques on their two hole vertices, Y vertices see four consecutive hole
        vertices, X sets see ``Y[i]`` and ``Y[i+3]``, Y vertices at nonconsecutive positions are
        adjacent and R is a clique joined to X.
        """
        edges = [(i, (i + 1) % 5) for i in range(5)]
        x_all = [v for part in self.x for v in part]

        for i in range(5):
            flanks = self.y[i] + self.y[(i + 3) % 5]
            edges += itertools.combinations(self.x[i], 2)
            edges += [(v, h) for v in self.x[i] for h in (i, (i + 1) % 5)]
            edges += [(v, y) for v in self.x[i] for y in flanks]
            edges += [(y, (i + k) % 5) for y in self.y[i] for k in range(4)]
            edges += [(y, z) for y in self.y[i] for z in self.y[(i + 2) % 5]]

        edges += itertools.combinations(self.r, 2)
        edges += [(v, x) for v in self.r for x in x_all]

        return edges

    def cross_pairs(self) -> list[Edge]:
        """Get the pairs of X vertices in different X sets."""
        return [
            (u, v)
            for i, j in itertools.combinations(range(5), 2)
            for u, v in itertools.product(self.x[i], self.x[j])
        ]

    def graph(self, cross_edges: Iterable[Edge] = ()) -> Graph:
        """Build the instance with the given edges between different X sets."""
        return Graph(self.vertex_count, [*self.base_edges(), *cross_edges])


def build_c5_instance(
    x_sizes: Sequence[int],
    y_positions: Iterable[int] = (),
    r_size: int = 0,
    cross_edges: Iterable[Edge] = (),
) -> Graph:
    """Build a graph around the 5-hole ``0-1-2-3-4`` with the given X, Y and R shape.

    The result is not checked for class membership. See 'C5Layout' for the vertex numbering.
    """
    return C5Layout.of(x_sizes, y_positions, r_size).graph(cross_edges)


def _exhaustive(spec: GenSpec) -> Iterator[Graph]:
    for n in range(spec.min_n, spec.max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))

        for mask in range(1 << len(pairs)):
            g = Graph(n, [pairs[k] for k in bits.iter_bits(mask)])

            if in_class(g):
                yield g


def _random_candidate(rng: random.Random, spec: GenSpec) -> Graph:
    n = rng.randint(spec.min_n, spec.max_n)
    p = rng.uniform(*_DENSITY)

    return Graph(n, [pair for pair in itertools.combinations(range(n), 2) if rng.random() < p])


def _constructive_candidate(rng: random.Random, spec: GenSpec) -> Graph:
    """Spread the vertices beyond the hole over X sets, Y positions and R at random."""
    x_sizes = [0] * 5
    y_positions: set[int] = set()
    r_size = 0

    for _ in range(rng.randint(spec.min_n, spec.max_n) - 5):
        slot = rng.randrange(12)

        if slot < 5:  # noqa: PLR2004
            x_sizes[slot] += 1
        elif slot < 10 and (i := slot - 5) not in y_positions:  # noqa: PLR2004
            y_positions.add(i)
        elif slot == 10 and r_size < 2:  # noqa: PLR2004
            r_size += 1
        else:
            x_sizes[rng.randrange(5)] += 1

    layout = C5Layout.of(x_sizes, y_positions, r_size)
    cross = [pair for pair in layout.cross_pairs() if rng.random() < _CROSS_EDGE_PROBABILITY]

    return layout.graph(cross)


def generate(spec: GenSpec) -> Iterator[Graph]:
    """Yield class members as described by 'spec'.

    The stream is finite and may be empty when few candidates pass the membership filter.
    """
    if spec.strategy is Strategy.EXHAUSTIVE_LABELED:
        yield from _exhaustive(spec)
        return

    draw = (
        _random_candidate if spec.strategy is Strategy.RANDOM_FILTERED else _constructive_candidate
    )
    rng = random.Random(spec.seed)  # noqa: S311
    produced = 0

    for _ in range(spec.count * spec.attempts):
        if produced == spec.count:
            break

        if in_class(g := draw(rng, spec)):
            produced += 1
            yield g

    _log.debug(
        "Generated graphs.",
        strategy=str(spec.strategy),
        produced=produced,
        wanted=spec.count,
    )
