"""Tests for cliques, holes and the forbidden subgraph search."""

from __future__ import annotations

import typing

import networkx as nx
import pytest

from clawfree.core.exceptions import PreconditionError
from clawfree.graph.models import Graph
from clawfree.graph.operations import complement, is_connected
from clawfree.oracle import (
    NON_LINE_GRAPHS,
    GenSpec,
    Strategy,
    brute_clique_number,
    brute_forbidden,
    brute_stability_number,
    build_c5_instance,
    catalog,
    generate,
)
from clawfree.recognition.cliques import clique_number, stability_number
from clawfree.recognition.enum import ForbiddenKind
from clawfree.recognition.holes import find_hole, is_perfect_in_class
from clawfree.recognition.patterns import (
    PATTERNS,
    Witness,
    find_class_violation,
    find_forbidden,
    in_class,
)

if typing.TYPE_CHECKING:
    from collections.abc import Callable


@pytest.mark.parametrize(
    ("name", "kind"),
    [
        ("claw", ForbiddenKind.CLAW),
        ("4K1", ForbiddenKind.FOUR_K1),
        ("K5-e", ForbiddenKind.K5_MINUS_E),
        ("5-wheel", ForbiddenKind.FIVE_WHEEL),
        ("C5-twin", ForbiddenKind.C5_TWIN),
        ("P5-twin", ForbiddenKind.P5_TWIN),
    ],
)
def test_each_forbidden_graph_is_its_own_witness(name: str, kind: ForbiddenKind) -> None:
    """The first violation found in a forbidden graph is that graph itself."""
    g = catalog.named(name)
    witness = find_class_violation(g)

    assert witness is not None
    assert witness.kind is kind
    assert sorted(witness.vertices) == list(g.vertices)
    assert witness.matches(g)
    assert not in_class(g)


def test_claw_witness_lists_the_center_first(claw: Graph) -> None:
    """Witness vertices follow the pattern order."""
    witness = find_forbidden(claw, "claw")

    assert witness == Witness(ForbiddenKind.CLAW, (0, 1, 2, 3))
    assert witness.to_dict() == {"kind": "claw", "vertices": [0, 1, 2, 3]}


@pytest.mark.parametrize(
    "name",
    ["cycle-5", "cycle-7", "complete-5", "co-petersen", "path-5", "diamond", "2K2"],
)
def test_class_members(name: str) -> None:
    """Holes, cliques and the complement of the Petersen graph are members."""
    assert in_class(catalog.named(name))


def test_patterns_match_their_own_order() -> None:
    """Each pattern graph witnesses itself under the identity order."""
    for kind, pattern in PATTERNS.items():
        assert Witness(kind, tuple(pattern.vertices)).matches(pattern)


def test_witness_with_repeated_vertices_does_not_match(claw: Graph) -> None:
    """A witness must list distinct vertices."""
    assert not Witness(ForbiddenKind.CLAW, (0, 1, 1, 3)).matches(claw)


@pytest.mark.parametrize("seed", range(30))
def test_forbidden_search_agrees_with_brute_force(
    seed: int,
    from_networkx: Callable[[nx.Graph], Graph],
) -> None:
    """Every kind is found exactly when an exhaustive search finds it."""
    g = from_networkx(nx.gnp_random_graph(6 + seed % 4, 0.45 + (seed % 5) / 10, seed=seed))

    for kind in ForbiddenKind:
        witness = find_forbidden(g, kind)

        assert (witness is None) == (brute_forbidden(g, kind) is None), kind

        if witness is not None:
            assert witness.matches(g)


@pytest.mark.parametrize("seed", range(10))
def test_clique_and_stability_numbers(
    seed: int,
    from_networkx: Callable[[nx.Graph], Graph],
) -> None:
    """Certificates are cliques and stable sets of the optimal size."""
    h = nx.gnp_random_graph(14, 0.5, seed=seed)
    g = from_networkx(h)
    omega = clique_number(g)
    alpha = stability_number(g)

    assert omega.value == max(len(c) for c in nx.find_cliques(h))
    assert omega.value == brute_clique_number(g)
    assert alpha.value == brute_stability_number(g)
    assert len(omega.vertices) == omega.value
    assert all(h.has_edge(u, v) for u in omega.vertices for v in omega.vertices if u < v)
    assert not any(h.has_edge(u, v) for u in alpha.vertices for v in alpha.vertices)


def test_clique_number_within_a_subset(co_petersen: Graph) -> None:
    """Restricting to a vertex set searches only its induced subgraph."""
    assert clique_number(co_petersen).value == 4
    assert stability_number(co_petersen).value == 2
    assert clique_number(co_petersen, 0b11111).value == 2
    assert clique_number(Graph(0)).value == 0


def test_holes_are_found_in_canonical_order(c5: Graph) -> None:
    """Holes start at their smallest vertex and turn towards its smaller neighbour."""
    assert find_hole(c5, 5) == (0, 1, 2, 3, 4)
    assert find_hole(c5, 4) is None
    assert find_hole(catalog.cycle(7), 7) == tuple(range(7))
    assert find_hole(catalog.complete(6), 4) is None
    assert find_hole(Graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]), 5) == (0, 2, 4, 1, 3)


def test_holes_need_four_vertices(c5: Graph) -> None:
    """Triangles are not holes."""
    with pytest.raises(PreconditionError):
        find_hole(c5, 3)


def test_hole_search_within_a_subset() -> None:
    """Vertices outside 'within' are never used."""
    g = build_c5_instance((1, 0, 0, 0, 0))

    assert find_hole(g, 5, within=g.full_mask & ~1) is None
    assert find_hole(g, 5) is not None


def test_perfectness_inside_the_class() -> None:
    """Members with a stable set of size three are perfect exactly without 5- and 7-holes."""
    assert is_perfect_in_class(catalog.path(5))
    assert not is_perfect_in_class(catalog.cycle(7))
    assert not is_perfect_in_class(build_c5_instance((0, 3, 3, 0, 3)))


@pytest.mark.parametrize(
    "g",
    [catalog.cycle(5), catalog.star(3), Graph(4, [(0, 1), (2, 3)])],
    ids=["small-stability", "claw", "disconnected"],
)
def test_perfectness_preconditions(g: Graph) -> None:
    """Small stability number, non-members and disconnected graphs are rejected."""
    with pytest.raises(PreconditionError):
        is_perfect_in_class(g)


def test_non_line_graphs_outside_the_class_have_witnesses() -> None:
    """The forbidden graphs shared with the non-line graphs are rejected."""
    for name in ("claw", "P5-twin", "C5-twin", "5-wheel", "K5-e"):
        assert not in_class(NON_LINE_GRAPHS[name])


@pytest.mark.parametrize("seed", range(5))
def test_odd_antiholes_come_with_five_holes(seed: int) -> None:
    """Connected members with an odd antihole and a stable set of three have a 5-hole."""
    spec = GenSpec(7, 10, seed=seed, strategy=Strategy.RANDOM_FILTERED, count=5)

    for g in generate(spec):
        if not is_connected(g) or stability_number(g).value < 3:
            continue

        co = complement(g)

        if any(find_hole(co, k) is not None for k in (7, 9) if k <= g.vertex_count):
            assert find_hole(g, 5) is not None
