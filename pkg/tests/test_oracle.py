"""Tests for the named graphs, the brute-force oracles and the member generators."""

from __future__ import annotations

import itertools
import typing

import networkx as nx
import pytest

from clawfree.core.exceptions import InputError, PreconditionError, SizeGuardError
from clawfree.graph.models import Graph
from clawfree.graph.operations import complement, induced_subgraph
from clawfree.oracle import (
    FOUR_VERTEX_GRAPHS,
    NON_LINE_GRAPHS,
    C5Layout,
    GenSpec,
    Strategy,
    brute_chromatic,
    brute_clique_cutset,
    brute_clique_number,
    brute_edge_chromatic,
    brute_matching_number,
    brute_stability_number,
    build_c5_instance,
    catalog,
    generate,
    line_graph_obstruction,
)
from clawfree.recognition.patterns import in_class

if typing.TYPE_CHECKING:
    from collections.abc import Callable

#: Names of the four-vertex graphs paired with their complements.
COMPLEMENTS = [
    ("P4", "P4"),
    ("K4", "4K1"),
    ("diamond", "co-diamond"),
    ("C4", "2K2"),
    ("paw", "co-paw"),
    ("claw", "co-claw"),
]


def test_petersen_graphs_match_networkx(to_networkx: Callable[[Graph], nx.Graph]) -> None:
    """The Petersen graph and its complement, the line graph of K5, are built correctly."""
    petersen = nx.petersen_graph()

    assert nx.is_isomorphic(to_networkx(catalog.petersen()), petersen)
    assert nx.is_isomorphic(to_networkx(catalog.co_petersen()), nx.complement(petersen))
    assert nx.is_isomorphic(
        to_networkx(catalog.co_petersen()),
        nx.line_graph(nx.complete_graph(5)),
    )


def test_four_vertex_graphs_are_distinct(to_networkx: Callable[[Graph], nx.Graph]) -> None:
    """The eleven graphs on four vertices are pairwise non-isomorphic."""
    graphs = [to_networkx(g) for g in FOUR_VERTEX_GRAPHS.values()]

    assert len(graphs) == 11
    assert not any(nx.is_isomorphic(a, b) for a, b in itertools.combinations(graphs, 2))


@pytest.mark.parametrize(("name", "other"), COMPLEMENTS)
def test_four_vertex_complements(
    name: str,
    other: str,
    to_networkx: Callable[[Graph], nx.Graph],
) -> None:
    """Complements of the four-vertex graphs are found under their own names."""
    co = complement(FOUR_VERTEX_GRAPHS[name])

    assert nx.is_isomorphic(to_networkx(co), to_networkx(FOUR_VERTEX_GRAPHS[other]))


@pytest.mark.parametrize("name", list(NON_LINE_GRAPHS))
def test_non_line_graphs_are_minimal(name: str) -> None:
    """Each non-line graph is its own obstruction and loses it with any vertex removed."""
    g = NON_LINE_GRAPHS[name]
    found = line_graph_obstruction(g)

    assert found is not None
    assert found[0] == name

    for v in g.vertices:
        rest = induced_subgraph(g, [u for u in g.vertices if u != v])

        assert line_graph_obstruction(rest) is None


def test_line_graphs_have_no_obstruction() -> None:
    """Line graphs pass the obstruction search."""
    assert line_graph_obstruction(catalog.co_petersen()) is None
    assert line_graph_obstruction(catalog.cycle(7)) is None
    assert line_graph_obstruction(catalog.petersen(), ["claw"]) is not None


def test_named_graphs() -> None:
    """Family names carry their size and unknown names are input errors."""
    assert catalog.named("cycle-5") == catalog.cycle(5)
    assert catalog.named("star-3").vertex_count == 4
    assert catalog.named("2K2") == FOUR_VERTEX_GRAPHS["2K2"]

    with pytest.raises(InputError, match="unknown graph name"):
        catalog.named("wheel-5")

    with pytest.raises(InputError, match="at least three"):
        catalog.named("cycle-2")


@pytest.mark.parametrize(
    ("g", "chi", "omega", "alpha"),
    [
        (catalog.cycle(5), 3, 2, 2),
        (catalog.cycle(6), 2, 2, 3),
        (catalog.complete(6), 6, 6, 1),
        (catalog.petersen(), 3, 2, 4),
        (catalog.co_petersen(), 5, 4, 2),
    ],
    ids=["cycle-5", "cycle-6", "complete-6", "petersen", "co-petersen"],
)
def test_brute_force_vertex_numbers(g: Graph, chi: int, omega: int, alpha: int) -> None:
    """Chromatic, clique and stability numbers of named graphs."""
    assert brute_chromatic(g) == chi
    assert brute_clique_number(g) == omega
    assert brute_stability_number(g) == alpha


def test_brute_force_edge_numbers() -> None:
    """The Petersen graph has a perfect matching and needs four edge colors."""
    petersen = catalog.petersen()

    assert brute_edge_chromatic(catalog.complete(4)) == 3
    assert brute_edge_chromatic(petersen) == 4
    assert brute_matching_number(petersen) == 5
    assert brute_matching_number(catalog.star(6)) == 1


def test_size_guards() -> None:
    """Oracles refuse instances above their guard."""
    with pytest.raises(SizeGuardError) as info:
        brute_chromatic(catalog.complete(15))

    assert info.value.oracle == "brute_chromatic"
    assert info.value.size == 15
    assert info.value.budget == 14
    assert info.value.exit_code == 3


def test_brute_force_clique_cutsets() -> None:
    """Cut vertices are found, holes have none and disconnected graphs give the empty set."""
    bowtie = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])

    assert brute_clique_cutset(bowtie) == (2,)
    assert brute_clique_cutset(catalog.cycle(5)) is None
    assert brute_clique_cutset(Graph(3, [(0, 1)])) == ()


def test_generation_is_deterministic() -> None:
    """The same seed yields the same graphs."""
    spec = GenSpec(6, 9, seed=3, strategy=Strategy.RANDOM_FILTERED, count=4)

    assert list(generate(spec)) == list(generate(spec))


def test_exhaustive_generation_counts_members() -> None:
    """Every labeled graph on four vertices is a member except those with a claw or 4K1."""
    members = list(generate(GenSpec(4, 4)))

    assert len(members) == 59
    assert all(in_class(g) for g in members)


def test_exhaustive_generation_on_five_vertices() -> None:
    """The 5-hole and K5 are among the members on five vertices; the claw plus a vertex is not."""
    members = list(generate(GenSpec(5, 5)))

    assert catalog.cycle(5) in members
    assert catalog.complete(5) in members
    assert Graph(5, [(0, 1), (0, 2), (0, 3)]) not in members


def test_constructive_generation_keeps_the_hole() -> None:
    """Constructed members contain the 5-hole on vertices 0 to 4."""
    spec = GenSpec(6, 10, seed=1, strategy=Strategy.CONSTRUCTIVE_C5, count=5)

    for g in generate(spec):
        assert all(g.has_edge(i, (i + 1) % 5) for i in range(5))
        assert not any(g.has_edge(i, (i + 2) % 5) for i in range(5))


@pytest.mark.parametrize(
    "kwargs",
    [
        {"min_n": 5, "max_n": 4},
        {"min_n": 1, "max_n": 8},
        {"min_n": 4, "max_n": 8, "strategy": Strategy.CONSTRUCTIVE_C5},
        {"min_n": 1, "max_n": 3, "count": -1},
        {"min_n": 1, "max_n": 3, "attempts": 0},
    ],
    ids=["range", "exhaustive-limit", "constructive-minimum", "count", "attempts"],
)
def test_generator_spec_is_checked(kwargs: dict[str, typing.Any]) -> None:
    """Ranges the strategy cannot serve are rejected."""
    with pytest.raises(PreconditionError):
        GenSpec(**kwargs)


def test_c5_layout_numbering() -> None:
    """X vertices follow the hole, then Y, then R."""
    layout = C5Layout.of((1, 0, 2, 0, 0), y_positions=(0,), r_size=1)

    assert layout.x == ((5,), (), (6, 7), (), ())
    assert layout.y == ((8,), (), (), (), ())
    assert layout.r == (9,)
    assert layout.vertex_count == 10
    assert layout.cross_pairs() == [(5, 6), (5, 7)]

    with pytest.raises(PreconditionError):
        C5Layout.of((1, 0, 2, 0))

    with pytest.raises(PreconditionError):
        C5Layout.of((0, 0, 0, 0, 0), y_positions=(1, 1))


def test_anchored_instance() -> None:
    """Three X sets of three at positions 1, 2 and 4 give a member with clique number 5."""
    g = build_c5_instance((0, 3, 3, 0, 3))

    assert g.vertex_count == 14
    assert in_class(g)
    assert brute_clique_number(g) == 5
    assert brute_stability_number(g) == 3
