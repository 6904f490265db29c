"""Tests for the clique cutset decomposition and the recombination of atom colorings."""

from __future__ import annotations

import typing

import networkx as nx
import pytest

from clawfree.coloring.exact import exact_color
from clawfree.core.exceptions import ColoringError, InputError, PreconditionError
from clawfree.decomposition import AtomLeaf, decompose, find_clique_cutset, recombine
from clawfree.graph.models import Coloring, Graph
from clawfree.graph.operations import induced_subgraph, is_clique, is_connected
from clawfree.oracle import brute_chromatic, brute_clique_cutset, catalog
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from collections.abc import Callable

#: Two triangles sharing vertex 2.
BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def _random_connected(
    seed: int,
    from_networkx: Callable[[nx.Graph], Graph],
) -> Graph:
    n = 6 + seed % 5
    p = 0.3 + (seed % 3) / 10
    h = nx.gnp_random_graph(n, p, seed=seed)

    while not nx.is_connected(h):
        seed += 1000
        h = nx.gnp_random_graph(n, p, seed=seed)

    return from_networkx(h)


def test_bowtie_splits_at_its_cut_vertex() -> None:
    """A shared vertex is a one-vertex clique cutset."""
    tree = decompose(BOWTIE)
    cut = find_clique_cutset(BOWTIE)

    tree.validate()
    assert cut is not None
    assert 2 in cut
    assert [leaf.vertices for leaf in tree.leaves()] == [(0, 1, 2), (2, 3, 4)]
    assert tree.to_dict() == {
        "cutset": [2],
        "left": {"atom": [0, 1, 2]},
        "right": {"atom": [2, 3, 4]},
    }
    assert tree.render() == "cutset [2]\n  atom [0, 1, 2]\n  atom [2, 3, 4]"


@pytest.mark.parametrize("name", ["cycle-5", "complete-5", "co-petersen", "petersen"])
def test_graphs_without_clique_cutsets_are_atoms(name: str) -> None:
    """Holes, cliques and dense vertex-transitive graphs have no clique cutset."""
    g = catalog.named(name)
    tree = decompose(g)

    assert find_clique_cutset(g) is None
    assert tree.leaves() == [AtomLeaf(tuple(g.vertices))]
    assert list(tree.nodes()) == []


def test_paths_split_into_edges() -> None:
    """Every inner vertex of a path is a cutset, leaving one atom per edge."""
    tree = decompose(catalog.path(5))

    tree.validate()
    assert len(tree.leaves()) == 4
    assert all(len(leaf.vertices) == 2 for leaf in tree.leaves())


def test_tiny_graphs_are_single_leaves() -> None:
    """Graphs with at most one vertex need no split."""
    assert decompose(Graph(1)).leaves() == [AtomLeaf((0,))]
    assert decompose(Graph(0)).leaves() == [AtomLeaf(())]


def test_disconnected_graphs_are_rejected() -> None:
    """Components are decomposed separately."""
    with pytest.raises(PreconditionError):
        decompose(Graph(3, [(0, 1)]))

    with pytest.raises(PreconditionError):
        find_clique_cutset(Graph(2))


@pytest.mark.parametrize("seed", range(25))
def test_decomposition_agrees_with_brute_force(
    seed: int,
    from_networkx: Callable[[nx.Graph], Graph],
) -> None:
    """Cutsets exist exactly when brute force finds one and atoms have none left."""
    g = _random_connected(seed, from_networkx)
    cut = find_clique_cutset(g)

    assert (cut is None) == (brute_clique_cutset(g) is None)

    if cut is not None:
        assert is_clique(g, cut)
        assert not is_connected(g, g.full_mask & ~bits.pack(cut))

    tree = decompose(g)
    tree.validate()
    leaves = tree.leaves()

    assert len(leaves) <= g.vertex_count - 1
    assert set().union(*(leaf.vertices for leaf in leaves)) == set(g.vertices)

    for leaf in leaves:
        assert brute_clique_cutset(induced_subgraph(g, leaf.vertices)) is None


@pytest.mark.parametrize("seed", range(15))
def test_recombined_colorings_are_optimal(
    seed: int,
    from_networkx: Callable[[nx.Graph], Graph],
) -> None:
    """Gluing optimal atom colorings gives an optimal coloring of the whole graph."""
    g = _random_connected(seed, from_networkx)
    tree = decompose(g)
    colorings = [exact_color(induced_subgraph(g, leaf.vertices)) for leaf in tree.leaves()]
    coloring = recombine(tree, colorings)

    coloring.verify(g)
    assert coloring.color_count == max(c.color_count for c in colorings)
    assert coloring.color_count == brute_chromatic(g)


def test_recombine_permutes_colors_to_agree_on_the_cutset() -> None:
    """Atom colorings that disagree on the cutset are relabelled, not rejected."""
    tree = decompose(BOWTIE)
    coloring = recombine(tree, [Coloring((0, 1, 2)), Coloring((0, 1, 2))])

    coloring.verify(BOWTIE)
    assert coloring.color_count == 3
    assert coloring[2] == 2


def test_recombine_checks_its_input() -> None:
    """The number of colorings and their properness are checked."""
    tree = decompose(BOWTIE)

    with pytest.raises(InputError, match="expected 2 atom colorings"):
        recombine(tree, [Coloring((0, 1, 2))])

    with pytest.raises(ColoringError):
        recombine(tree, [Coloring((0, 0, 1)), Coloring((0, 1, 2))])
