"""Clique cutset decomposition into atoms, and recombination of atom colorings.

Clique cutsets are found from a minimal triangulation computed by maximum cardinality search:
the clique minimal separators of a graph are exactly the minimal separators of the triangulation
that are cliques in the graph, and each of those is the set of later neighbours of some vertex in
the elimination order. Small graphs are also scanned exhaustively.
"""

from __future__ import annotations

import dataclasses
import itertools
import typing

import structlog

from clawfree.core.exceptions import InputError, InternalError, PreconditionError
from clawfree.graph.models import Coloring
from clawfree.graph.operations import components, induced_subgraph, is_clique, is_connected
from clawfree.util import bits

if typing.TYPE_CHECKING:
    from collections.abc import Iterator, Sequence
    from typing import Any

    from clawfree.graph.models import Graph
    from clawfree.util.typing import Bitset

__all__ = (
    "DEFAULT_CUTSET_SCAN_LIMIT",
    "AtomLeaf",
    "AtomNode",
    "AtomTree",
    "decompose",
    "find_clique_cutset",
    "recombine",
)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()

#: Vertex sets up to this size are also scanned for clique cutsets clique by clique.
DEFAULT_CUTSET_SCAN_LIMIT = 12


@dataclasses.dataclass(frozen=True, slots=True)
class AtomLeaf:
    """An atom: a connected induced subgraph without a clique cutset."""

    #: The vertices of the atom, sorted.
    vertices: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        """Get a JSON-compatible form of the leaf."""
        return {"atom": list(self.vertices)}


@dataclasses.dataclass(frozen=True, slots=True)
class AtomNode:
    """A split along a clique cutset.

    'left' is an atom made of the cutset and one component it separates; 'right' covers the cutset
    and everything else.
    """

    cutset: tuple[int, ...]
    left: AtomLeaf | AtomNode
    right: AtomLeaf | AtomNode

    @property
    def vertices(self) -> tuple[int, ...]:
        """Get all vertices below this node, sorted."""
        return tuple(sorted(set(self.left.vertices) | set(self.right.vertices)))

    def to_dict(self) -> dict[str, Any]:
        """Get a JSON-compatible form of the subtree."""
        return {
            "cutset": list(self.cutset),
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
        }


@dataclasses.dataclass(frozen=True, slots=True)
class AtomTree:
    """The decomposition tree of a connected graph."""

    graph: Graph
    root: AtomLeaf | AtomNode

    def leaves(self) -> list[AtomLeaf]:
        """Get the atoms from left to right."""
        found: list[AtomLeaf] = []
        stack: list[AtomLeaf | AtomNode] = [self.root]

        while stack:
            node = stack.pop()

            if isinstance(node, AtomLeaf):
                found.append(node)
            else:
                stack.extend((node.right, node.left))

        return found

    def nodes(self) -> Iterator[AtomNode]:
        """Yield the internal nodes in preorder."""
        stack: list[AtomLeaf | AtomNode] = [self.root]

        while stack:
            node = stack.pop()

            if isinstance(node, AtomNode):
                yield node
                stack.extend((node.right, node.left))

    def to_dict(self) -> dict[str, Any]:
        """Get a JSON-compatible form of the tree."""
        return self.root.to_dict()

    def render(self, labels: Sequence[int] | None = None) -> str:
        """Draw the tree as indented text, one line per node.

        Vertex 'v' is printed as ``labels[v]`` when labels are given.
        """
        lines: list[str] = []

        def name(vs: Sequence[int]) -> list[int]:
            return list(vs) if labels is None else [labels[v] for v in vs]

        def walk(node: AtomLeaf | AtomNode, depth: int) -> None:
            indent = "  " * depth

            if isinstance(node, AtomLeaf):
                lines.append(f"{indent}atom {name(node.vertices)}")
                return

            lines.append(f"{indent}cutset {name(node.cutset)}")
            walk(node.left, depth + 1)
            walk(node.right, depth + 1)

        walk(self.root, 0)
        return "\n".join(lines)

    def validate(self) -> None:
        """Check the structural properties of the tree.

        Raises
        ------
        InternalError
            Raised if a cutset is not a separating clique, an atom is disconnected, or the tree
            has more than ``n - 1`` atoms for ``n >= 2``.

        """
        g = self.graph

        for node in self.nodes():
            cut = bits.pack(node.cutset)
            left_only = bits.pack(node.left.vertices) & ~cut
            right_only = bits.pack(node.right.vertices) & ~cut

            if not is_clique(g, cut):
                raise InternalError(f"cutset {list(node.cutset)} is not a clique")

            if any(g.neighbors(v) & right_only for v in bits.iter_bits(left_only)):
                raise InternalError(f"cutset {list(node.cutset)} does not separate its sides")

        leaves = self.leaves()

        for leaf in leaves:
            if not is_connected(g, bits.pack(leaf.vertices)):
                raise InternalError(f"atom {list(leaf.vertices)} is disconnected")

        if g.vertex_count >= 2 and len(leaves) > g.vertex_count - 1:  # noqa: PLR2004
            raise InternalError(f"{len(leaves)} atoms for {g.vertex_count} vertices")


def _minimal_triangulation(g: Graph, within: Bitset) -> tuple[list[int], dict[int, Bitset]]:
    """Run maximum cardinality search with fill-in on the subgraph induced by 'within'.

    Returns
    -------
    tuple[list[int], dict[int, Bitset]]
        The vertices in the order they were numbered (the reverse of the elimination order) and
        the adjacency of the triangulation.

    """
    adj = g.adjacency
    fill: dict[int, Bitset] = {v: adj[v] & within for v in bits.iter_bits(within)}
    weight: dict[int, int] = dict.fromkeys(bits.iter_bits(within), 0)
    unnumbered = within
    numbered: list[int] = []

    while unnumbered:
        v = max(bits.iter_bits(unnumbered), key=lambda u: (weight[u], -u))
        unnumbered &= ~(1 << v)
        reached: Bitset = 0

        for level in sorted({weight[u] for u in bits.iter_bits(unnumbered)}):
            # vertices of weight 'level' reached by paths whose interior stays below 'level'
            low = bits.pack(u for u in bits.iter_bits(unnumbered) if weight[u] < level)
            interior: Bitset = 0
            frontier = adj[v] & low

            while frontier:
                interior |= frontier
                step = 0

                for x in bits.iter_bits(frontier):
                    step |= adj[x]

                frontier = step & low & ~interior

            touch = (1 << v) | interior

            for u in bits.iter_bits(unnumbered):
                if weight[u] == level and adj[u] & touch:
                    reached |= 1 << u

        for u in bits.iter_bits(reached):
            weight[u] += 1
            fill[u] |= 1 << v
            fill[v] |= 1 << u

        numbered.append(v)

    return numbered, fill


def _separates(g: Graph, within: Bitset, cut: Bitset) -> bool:
    rest = within & ~cut
    return bool(rest) and not is_connected(g, rest)


def _scan_cliques(g: Graph, within: Bitset) -> Bitset | None:
    """Try every clique of the subgraph as a cutset, smallest first."""
    vertices = bits.members(within)

    for size in range(1, len(vertices) - 1):
        for combo in itertools.combinations(vertices, size):
            cut = bits.pack(combo)

            if is_clique(g, cut) and _separates(g, within, cut):
                return cut

    return None


def _find_cutset(g: Graph, within: Bitset, scan_limit: int) -> Bitset | None:
    numbered, fill = _minimal_triangulation(g, within)
    earlier: Bitset = 0
    later_neighbours: list[Bitset] = []

    for v in numbered:
        later_neighbours.append(fill[v] & earlier)
        earlier |= 1 << v

    for cut in reversed(later_neighbours):
        if cut and is_clique(g, cut) and _separates(g, within, cut):
            return cut

    if bits.size(within) <= scan_limit and (cut := _scan_cliques(g, within)) is not None:
        _log.warning(
            "Exhaustive scan found a clique cutset the triangulation missed.",
            cutset=bits.members(cut),
        )
        return cut

    return None


def find_clique_cutset(
    g: Graph,
    *,
    scan_limit: int = DEFAULT_CUTSET_SCAN_LIMIT,
) -> tuple[int, ...] | None:
    """Find a clique whose removal disconnects 'g'.

    Parameters
    ----------
    g : Graph
        A connected graph.
    scan_limit : int, optional
        Graphs with at most this many vertices are also scanned clique by clique.

    Returns
    -------
    tuple[int, ...] | None
        The vertices of a clique cutset, or None if 'g' has none.

    Raises
    ------
    PreconditionError
        Raised if 'g' is disconnected.

    """
    if not is_connected(g):
        raise PreconditionError("clique cutset search needs a connected graph")

    cut = _find_cutset(g, g.full_mask, scan_limit)
    return None if cut is None else tuple(bits.members(cut))


def _split(g: Graph, within: Bitset, scan_limit: int) -> AtomLeaf | AtomNode:
    cut = _find_cutset(g, within, scan_limit)

    if cut is None:
        return AtomLeaf(tuple(bits.members(within)))

    side = components(g, within & ~cut)[0]

    # shrink until the cutset plus its side is an atom
    while (inner := _find_cutset(g, cut | side, scan_limit)) is not None:
        pieces = components(g, (cut | side) & ~inner)
        side = next(piece for piece in pieces if not piece & cut)
        cut = inner

    _log.debug("Split along clique cutset.", cutset=bits.members(cut), atom_size=bits.size(side))

    return AtomNode(
        cutset=tuple(bits.members(cut)),
        left=AtomLeaf(tuple(bits.members(cut | side))),
        right=_split(g, within & ~side, scan_limit),
    )


def decompose(g: Graph, *, scan_limit: int = DEFAULT_CUTSET_SCAN_LIMIT) -> AtomTree:
    """Decompose a connected graph along clique cutsets.

    Parameters
    ----------
    g : Graph
        A connected graph.
    scan_limit : int, optional
        Vertex sets with at most this many vertices are also scanned clique by clique.

    Returns
    -------
    AtomTree
        A tree whose leaves are the atoms of 'g'. A graph with at most one vertex is a single
        leaf.

    Raises
    ------
    PreconditionError
        Raised if 'g' is disconnected.

    """
    if not is_connected(g):
        raise PreconditionError("decompose needs a connected graph; color components separately")

    return AtomTree(g, _split(g, g.full_mask, scan_limit))


def recombine(tree: AtomTree, atom_colorings: Sequence[Coloring]) -> Coloring:
    """Merge colorings of the atoms into a coloring of the whole graph.

    At every split the colors of the right side are permuted to agree with the left side on the
    cutset; right-side colors not used on the cutset move to the smallest colors still free. The
    result uses as many colors as the most colorful atom.

    Parameters
    ----------
    tree : AtomTree
        The decomposition.
    atom_colorings : Sequence[Coloring]
        One coloring per leaf, in 'tree.leaves()' order, indexed like the induced subgraph of the
        leaf (its vertices in increasing order).

    Returns
    -------
    Coloring
        A proper coloring of 'tree.graph'.

    Raises
    ------
    InputError
        Raised if the number of colorings does not match the leaves or an atom coloring is not
        proper on its atom.

    """
    leaves = tree.leaves()

    if len(leaves) != len(atom_colorings):
        raise InputError(f"expected {len(leaves)} atom colorings; got {len(atom_colorings)}")

    for leaf, coloring in zip(leaves, atom_colorings, strict=True):
        coloring.verify(induced_subgraph(tree.graph, leaf.vertices))

    pending = iter(atom_colorings)

    def merge(node: AtomLeaf | AtomNode) -> dict[int, int]:
        if isinstance(node, AtomLeaf):
            colors = next(pending).normalized().colors
            return dict(zip(node.vertices, colors, strict=True))

        left, right = merge(node.left), merge(node.right)
        permutation = {right[v]: left[v] for v in node.cutset}
        taken = set(permutation.values())
        free = (c for c in itertools.count() if c not in taken)

        for c in sorted(set(right.values())):
            if c not in permutation:
                permutation[c] = next(free)

        return left | {v: permutation[c] for v, c in right.items()}

    coloring = Coloring.from_mapping(merge(tree.root), tree.graph.vertex_count)
    coloring.verify(tree.graph)

    return coloring
