"""Brute-force reference answers for small graphs.

Nothing here calls the coloring, recognition or matching code of the library; every search works
on plain adjacency sets so that agreement with the fast algorithms means something. Each oracle
has a size guard and refuses larger inputs instead of running for hours.
"""

from __future__ import annotations

import itertools
import typing

from clawfree.core.exceptions import SizeGuardError
from clawfree.oracle.catalog import FOUR_VERTEX_GRAPHS, NON_LINE_GRAPHS
from clawfree.recognition.enum import ForbiddenKind

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence

    from clawfree.coloring.lists import ListInstance
    from clawfree.graph.models import Graph

__all__ = (
    "CHROMATIC_LIMIT",
    "CLIQUE_LIMIT",
    "EDGE_LIMIT",
    "LIST_LIMIT",
    "SUBGRAPH_LIMIT",
    "brute_chromatic",
    "brute_clique_cutset",
    "brute_clique_number",
    "brute_edge_chromatic",
    "brute_forbidden",
    "brute_list_color",
    "brute_matching_number",
    "brute_stability_number",
    "line_graph_obstruction",
)

#: Largest vertex count accepted by 'brute_chromatic'.
CHROMATIC_LIMIT = 14

#: Largest edge count accepted by 'brute_edge_chromatic' and 'brute_matching_number'.
EDGE_LIMIT = 20

#: Largest total clique size accepted by 'brute_list_color'.
LIST_LIMIT = 12

#: Largest vertex count accepted by the induced subgraph and clique cutset searches.
SUBGRAPH_LIMIT = 12

#: Largest vertex count accepted by 'brute_clique_number' and 'brute_stability_number'.
CLIQUE_LIMIT = 24

_PATTERN_NAMES: dict[ForbiddenKind, Graph] = {
    ForbiddenKind.CLAW: NON_LINE_GRAPHS["claw"],
    ForbiddenKind.FOUR_K1: FOUR_VERTEX_GRAPHS["4K1"],
    ForbiddenKind.K5_MINUS_E: NON_LINE_GRAPHS["K5-e"],
    ForbiddenKind.FIVE_WHEEL: NON_LINE_GRAPHS["5-wheel"],
    ForbiddenKind.C5_TWIN: NON_LINE_GRAPHS["C5-twin"],
    ForbiddenKind.P5_TWIN: NON_LINE_GRAPHS["P5-twin"],
}


def _guard(oracle: str, size: int, limit: int) -> None:
    if size > limit:
        raise SizeGuardError(oracle, size, limit)


def _neighbour_sets(g: Graph) -> list[set[int]]:
    return [{u for u in g.vertices if g.has_edge(v, u)} for v in g.vertices]


def _max_clique(adj: Sequence[set[int]]) -> list[int]:
    """Find a largest clique by plain branching on every vertex in order."""
    best: list[int] = []

    def grow(clique: list[int], candidates: list[int]) -> None:
        nonlocal best

        if len(clique) > len(best):
            best = list(clique)

        for k, v in enumerate(candidates):
            if len(clique) + len(candidates) - k <= len(best):
                return

            grow([*clique, v], [u for u in candidates[k + 1 :] if u in adj[v]])

    grow([], list(range(len(adj))))
    return best


def _k_colorable(adj: Sequence[set[int]], k: int) -> list[int] | None:
    """Find a coloring with colors ``0..k-1``, each new color opened in vertex order."""
    n = len(adj)
    colors = [-1] * n

    def place(v: int, opened: int) -> bool:
        if v == n:
            return True

        for c in range(min(opened + 1, k)):
            if all(colors[u] != c for u in adj[v]):
                colors[v] = c

                if place(v + 1, max(opened, c + 1)):
                    return True

        colors[v] = -1
        return False

    return colors if place(0, 0) else None


def _chromatic(adj: Sequence[set[int]]) -> int:
    if not adj:
        return 0

    k = len(_max_clique(adj))

    while _k_colorable(adj, k) is None:
        k += 1

    return k


def brute_chromatic(g: Graph) -> int:
    """Get the chromatic number by trying k-colorings for k upward from the clique number.

    Raises
    ------
    SizeGuardError
        Raised if 'g' has more than 'CHROMATIC_LIMIT' vertices.

    """
    _guard("brute_chromatic", g.vertex_count, CHROMATIC_LIMIT)
    return _chromatic(_neighbour_sets(g))


def brute_edge_chromatic(g: Graph) -> int:
    """Get the chromatic index as the chromatic number of a separately built line graph.

    Raises
    ------
    SizeGuardError
        Raised if 'g' has more than 'EDGE_LIMIT' edges.

    """
    _guard("brute_edge_chromatic", g.edge_count, EDGE_LIMIT)
    edges = [(u, v) for u, v in itertools.combinations(g.vertices, 2) if g.has_edge(u, v)]
    adj = [
        {j for j, other in enumerate(edges) if j != i and set(edge) & set(other)}
        for i, edge in enumerate(edges)
    ]

    return _chromatic(adj)


def brute_list_color(inst: ListInstance) -> dict[int, int] | None:
    """Search every list-respecting assignment of the clique vertices for a proper one.

    Returns
    -------
    dict[int, int] | None
        A color for every clique vertex, or None if no proper assignment exists.

    Raises
    ------
    SizeGuardError
        Raised if the cliques hold more than 'LIST_LIMIT' vertices together.

    """
    order = [
        (v, sorted(colors))
        for q, colors in zip(inst.cliques, inst.lists, strict=True)
        for v in q
    ]
    _guard("brute_list_color", len(order), LIST_LIMIT)
    assignment: dict[int, int] = {}

    def place(k: int) -> bool:
        if k == len(order):
            return True

        v, colors = order[k]

        for c in colors:
            if all(assignment[u] != c or not inst.graph.has_edge(u, v) for u in assignment):
                assignment[v] = c

                if place(k + 1):
                    return True

                del assignment[v]

        return False

    return dict(assignment) if place(0) else None


def brute_matching_number(g: Graph) -> int:
    """Get the largest number of pairwise disjoint edges by branching on each edge.

    Raises
    ------
    SizeGuardError
        Raised if 'g' has more than 'EDGE_LIMIT' edges.

    """
    _guard("brute_matching_number", g.edge_count, EDGE_LIMIT)
    edges = [(u, v) for u, v in itertools.combinations(g.vertices, 2) if g.has_edge(u, v)]

    def best(k: int, used: frozenset[int]) -> int:
        if k == len(edges):
            return 0

        skip = best(k + 1, used)
        u, v = edges[k]

        if u in used or v in used:
            return skip

        return max(skip, 1 + best(k + 1, used | {u, v}))

    return best(0, frozenset())


def brute_clique_number(g: Graph) -> int:
    """Get the size of a largest clique.

    Raises
    ------
    SizeGuardError
        Raised if 'g' has more than 'CLIQUE_LIMIT' vertices.

    """
    _guard("brute_clique_number", g.vertex_count, CLIQUE_LIMIT)
    return len(_max_clique(_neighbour_sets(g)))


def brute_stability_number(g: Graph) -> int:
    """Get the size of a largest set of pairwise nonadjacent vertices.

    Raises
    ------
    SizeGuardError
        Raised if 'g' has more than 'CLIQUE_LIMIT' vertices.

    """
    _guard("brute_stability_number", g.vertex_count, CLIQUE_LIMIT)
    adj = _neighbour_sets(g)
    return len(_max_clique([set(g.vertices) - adj[v] - {v} for v in g.vertices]))


def _connected(adj: Sequence[set[int]], vertices: set[int]) -> bool:
    if not vertices:
        return True

    start = min(vertices)
    seen, stack = {start}, [start]

    while stack:
        for u in adj[stack.pop()] & vertices - seen:
            seen.add(u)
            stack.append(u)

    return seen == vertices


def brute_clique_cutset(g: Graph) -> tuple[int, ...] | None:
    """Find a smallest clique whose removal leaves a disconnected graph.

    The empty set counts when 'g' is already disconnected.

    Raises
    ------
    SizeGuardError
        Raised if 'g' has more than 'SUBGRAPH_LIMIT' vertices.

    """
    _guard("brute_clique_cutset", g.vertex_count, SUBGRAPH_LIMIT)
    adj = _neighbour_sets(g)
    everything = set(g.vertices)

    for size in range(g.vertex_count - 1):
        for cut in itertools.combinations(g.vertices, size):
            if all(b in adj[a] for a, b in itertools.combinations(cut, 2)) and not _connected(
                adj,
                everything - set(cut),
            ):
                return cut

    return None


def _induces(g: Graph, pattern: Graph, vertices: Sequence[int]) -> bool:
    return all(
        g.has_edge(vertices[i], vertices[j]) == pattern.has_edge(i, j)
        for i, j in itertools.combinations(range(pattern.vertex_count), 2)
    )


def _find_induced(g: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Find vertices of 'g' inducing 'pattern', the k-th one playing pattern vertex k."""
    k = pattern.vertex_count
    degrees = sorted(pattern.degree(v) for v in pattern.vertices)

    for subset in itertools.combinations(g.vertices, k):
        inner = sorted(sum(g.has_edge(u, v) for u in subset) for v in subset)

        if inner != degrees:
            continue

        for order in itertools.permutations(subset):
            if _induces(g, pattern, order):
                return order

    return None


def brute_forbidden(g: Graph, kind: ForbiddenKind | str) -> tuple[int, ...] | None:
    """Find an induced copy of one forbidden kind by trying every vertex subset and order.

    Returns
    -------
    tuple[int, ...] | None
        Vertices in the order of the pattern's edge list in the catalogue, or None.

    Raises
    ------
    SizeGuardError
        Raised if 'g' has more than 'SUBGRAPH_LIMIT' vertices.

    """
    _guard("brute_forbidden", g.vertex_count, SUBGRAPH_LIMIT)
    return _find_induced(g, _PATTERN_NAMES[ForbiddenKind(kind)])


def line_graph_obstruction(
    g: Graph,
    names: Iterable[str] | None = None,
) -> tuple[str, tuple[int, ...]] | None:
    """Find an induced copy of one of the nine minimal non-line graphs.

    A graph is a line graph exactly when this returns None.

    Parameters
    ----------
    g : Graph
        The graph to search.
    names : Iterable[str] | None, optional
        Restrict the search to these catalogue names.

    Raises
    ------
    SizeGuardError
        Raised if 'g' has more than 'SUBGRAPH_LIMIT' vertices.

    """
    _guard("line_graph_obstruction", g.vertex_count, SUBGRAPH_LIMIT)
    patterns: Mapping[str, Graph] = (
        NON_LINE_GRAPHS if names is None else {name: NON_LINE_GRAPHS[name] for name in names}
    )

    for name, pattern in patterns.items():
        if (found := _find_induced(g, pattern)) is not None:
            return name, found

    return None
