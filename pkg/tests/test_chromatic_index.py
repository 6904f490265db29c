"""Tests for edge coloring through line graphs."""

from __future__ import annotations

import itertools
import typing

import networkx as nx
import pytest

from clawfree.chromatic_index import EdgeColoring, chromatic_index, matching_gate
from clawfree.core.exceptions import ColoringError, MatchingTooLargeError
from clawfree.graph.operations import line_graph
from clawfree.oracle import brute_edge_chromatic, catalog, line_graph_obstruction
from clawfree.oracle.brute import EDGE_LIMIT, SUBGRAPH_LIMIT
from clawfree.recognition.patterns import in_class

if typing.TYPE_CHECKING:
    from collections.abc import Callable

    from clawfree.graph.models import Graph


@pytest.mark.parametrize(
    ("name", "chi_prime", "vizing_class"),
    [
        ("complete-4", 3, 1),
        ("complete-5", 5, 2),
        ("complete-6", 5, 1),
        ("star-5", 5, 1),
        ("cycle-5", 3, 2),
        ("cycle-6", 2, 1),
    ],
)
def test_chromatic_index_of_named_graphs(name: str, chi_prime: int, vizing_class: int) -> None:
    """Complete graphs, stars and cycles get the known number of edge colors."""
    g = catalog.named(name)
    result = chromatic_index(g)

    result.verify(g)
    assert result.chi_prime == chi_prime
    assert result.chi_prime == brute_edge_chromatic(g)
    assert result.vizing_class == vizing_class
    assert result.delta == g.max_degree()


def test_four_disjoint_edges_are_rejected() -> None:
    """The Petersen graph has a perfect matching, four edges of which are reported."""
    g = catalog.petersen()
    gate = matching_gate(g)

    assert gate.matching_number == 5
    assert not gate.ok

    with pytest.raises(MatchingTooLargeError) as info:
        chromatic_index(g)

    assert len(info.value.edges) == 4
    assert len({v for edge in info.value.edges for v in edge}) == 8
    assert all(g.has_edge(u, v) for u, v in info.value.edges)
    assert info.value.exit_code == 2


def test_matching_gate_passes_small_matchings() -> None:
    """Graphs without four disjoint edges pass with their matching number."""
    gate = matching_gate(catalog.complete(7))

    assert gate.ok
    assert gate.matching_number == 3
    assert gate.witness is None


def test_edge_colors_are_looked_up_in_either_order() -> None:
    """Edges are found whichever endpoint comes first."""
    result = chromatic_index(catalog.complete(4))

    assert result.color_of(0, 1) == result.color_of(1, 0)
    assert result.to_dict()["class"] == 1
    assert len(result.to_dict()["edge_colors"]) == 6

    with pytest.raises(ColoringError, match="not an edge"):
        result.color_of(0, 0)


def test_edge_coloring_verify_rejects_clashes() -> None:
    """Two edges at one vertex with the same color are reported."""
    g = catalog.path(3)

    EdgeColoring(((0, 1), (1, 2)), (0, 1), 2).verify(g)

    with pytest.raises(ColoringError, match="meet at 1"):
        EdgeColoring(((0, 1), (1, 2)), (0, 0), 2).verify(g)

    with pytest.raises(ColoringError, match="does not match"):
        EdgeColoring(((0, 1),), (0,), 2).verify(g)


@pytest.mark.parametrize("seed", range(15))
def test_chromatic_index_agrees_with_brute_force(
    seed: int,
    from_networkx: Callable[[nx.Graph], Graph],
) -> None:
    """Graphs on seven vertices have no four disjoint edges and are edge colored optimally."""
    g = from_networkx(nx.gnp_random_graph(7, 0.25 + (seed % 4) / 10, seed=seed))
    lg, _ = line_graph(g)
    result = chromatic_index(g)

    result.verify(g)
    assert result.chi_prime == brute_edge_chromatic(g)
    assert in_class(lg)

    if lg.vertex_count <= SUBGRAPH_LIMIT:
        assert line_graph_obstruction(lg) is None


def _check_edge_coloring(g: Graph) -> None:
    result = chromatic_index(g)

    result.verify(g)
    assert g.max_degree() <= result.chi_prime <= g.max_degree() + 1
    assert result.chi_prime == brute_edge_chromatic(g), list(g.edges())


def test_chromatic_index_of_every_graph_up_to_six_vertices(
    from_networkx: Callable[[nx.Graph], Graph],
) -> None:
    """Every graph with an edge on at most six vertices, up to isomorphism, is colored optimally."""
    graphs = [h for h in nx.graph_atlas_g() if h.number_of_nodes() <= 6 and h.number_of_edges()]

    assert len(graphs) == 202

    for h in graphs:
        _check_edge_coloring(from_networkx(h))


@pytest.mark.slow
def test_chromatic_index_of_a_thousand_random_graphs(
    from_networkx: Callable[[nx.Graph], Graph],
) -> None:
    """A thousand random graphs on up to nine vertices without four disjoint edges."""
    checked = 0

    for seed in itertools.count():
        if checked == 1000:
            break

        assert seed < 10_000, f"only {checked} graphs passed the matching gate"

        g = from_networkx(nx.gnp_random_graph(4 + seed % 6, 0.2 + (seed % 7) / 10, seed=seed))

        if g.edge_count == 0 or g.edge_count > EDGE_LIMIT or not matching_gate(g).ok:
            continue

        _check_edge_coloring(g)
        checked += 1
