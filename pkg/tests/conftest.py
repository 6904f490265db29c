"""Shared fixtures: named graphs, a networkx bridge and a clean configuration."""

from __future__ import annotations

import itertools
import logging
import typing

import networkx as nx
import pytest

from clawfree.core import config
from clawfree.graph.models import Graph
from clawfree.oracle import build_c5_instance, catalog
from clawfree.recognition.patterns import in_class
from clawfree.util.logging import configure_logging

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Iterator

configure_logging(logging.WARNING)


@pytest.fixture
def to_networkx() -> Callable[[Graph], nx.Graph]:
    """Get a converter from library graphs to networkx graphs on the same vertices."""

    def convert(g: Graph) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(g.vertices)
        h.add_edges_from(g.edges())
        return h

    return convert


@pytest.fixture
def from_networkx() -> Callable[[nx.Graph], Graph]:
    """Get a converter from networkx graphs with integer nodes ``0..n-1``."""

    def convert(h: nx.Graph) -> Graph:
        return Graph(h.number_of_nodes(), list(h.edges()))

    return convert


@pytest.fixture
def c5() -> Graph:
    """Get the 5-hole ``0-1-2-3-4``."""
    return catalog.cycle(5)


@pytest.fixture
def claw() -> Graph:
    """Get the claw with center 0."""
    return catalog.star(3)


@pytest.fixture
def co_petersen() -> Graph:
    """Get the complement of the Petersen graph."""
    return catalog.co_petersen()


@pytest.fixture
def clean_config(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Drop the configuration singleton and every solver variable from the environment."""
    for name in ("CLAWFREE_NODE_BUDGET", "CLAWFREE_STRICT", "CLAWFREE_CUTSET_SCAN_LIMIT"):
        monkeypatch.delenv(name, raising=False)

    config.reset()
    yield
    config.reset()


@pytest.fixture
def anchored_members() -> Callable[[], Iterator[Graph]]:
    """Get a generator of members built around the 5-hole ``0-1-2-3-4`` with X at an anchor.

    Every anchor 'i' gets X sets of up to three vertices at positions ``i, i+1, i+3`` and every
    subset of Y positions; each shape is built once and kept if it is a class member.
    """

    def members() -> Iterator[Graph]:
        seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()

        for anchor, sizes in itertools.product(range(5), itertools.product(range(4), repeat=3)):
            x_sizes = [0] * 5

            for offset, size in zip((0, 1, 3), sizes, strict=True):
                x_sizes[(anchor + offset) % 5] = size

            for k in range(6):
                for y_positions in itertools.combinations(range(5), k):
                    if (key := (tuple(x_sizes), y_positions)) in seen:
                        continue

                    seen.add(key)

                    if in_class(g := build_c5_instance(x_sizes, y_positions)):
                        yield g

    return members
