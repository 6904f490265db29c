"""Tests for the exact solver, the list coloring, the peeling steps and the coloring pipeline."""

from __future__ import annotations

import collections
import itertools
import random
import typing

import networkx as nx
import pytest

from clawfree.coloring import pipeline
from clawfree.coloring.alpha2 import color_alpha2
from clawfree.coloring.constants import SolverOptions
from clawfree.coloring.enum import Stage
from clawfree.coloring.exact import exact_color
from clawfree.coloring.lemmas import (
    StableSet,
    _five_coloring,
    color_k_colorable_case,
    color_three_xi_case,
    good_stable_set,
    x_anchor,
)
from clawfree.coloring.lists import ListInstance, l_color_three_cliques
from clawfree.coloring.pipeline import color_class_graph
from clawfree.core.exceptions import (
    BudgetExceededError,
    NotInClassError,
    PreconditionError,
    StructureViolationError,
)
from clawfree.graph.models import Graph
from clawfree.oracle import (
    GenSpec,
    Strategy,
    brute_chromatic,
    brute_list_color,
    build_c5_instance,
    catalog,
    generate,
)
from clawfree.recognition.cliques import clique_number
from clawfree.recognition.patterns import in_class
from clawfree.structure.c5 import classify_c5

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Iterator

HOLE = (0, 1, 2, 3, 4)

#: Three cliques of three vertices each at positions 1, 2 and 4 of the hole.
ANCHORED = build_c5_instance((0, 3, 3, 0, 3))

#: The same shape with three disjoint triangles across the X sets.
CROSSED = build_c5_instance(
    (0, 3, 3, 0, 3),
    cross_edges=[
        (5, 8), (5, 11), (8, 11),
        (6, 9), (6, 12), (9, 12),
        (7, 10), (7, 13), (10, 13),
    ],
)  # fmt: skip


def _anchored_lists(g: Graph) -> ListInstance:
    """Lists of the X sets of 'ANCHORED' once the hole takes colors 0 to 4 in order."""
    return ListInstance.build(
        g,
        [(5, 6, 7), (8, 9, 10), (11, 12, 13)],
        [{3, 4, 0}, {4, 0, 1}, {1, 2, 3}],
        [4, 0, 2],
    )


@pytest.mark.parametrize(
    ("g", "expected"),
    [
        (catalog.cycle(5), 3),
        (catalog.complete(4), 4),
        (catalog.petersen(), 3),
        (catalog.co_petersen(), 5),
        (Graph(3), 1),
    ],
    ids=["cycle-5", "complete-4", "petersen", "co-petersen", "empty-3"],
)
def test_exact_coloring_of_named_graphs(g: Graph, expected: int) -> None:
    """The exact solver finds the chromatic number."""
    coloring = exact_color(g)

    coloring.verify(g)
    assert coloring.color_count == expected


def test_exact_coloring_of_the_empty_graph() -> None:
    """A graph without vertices needs no colors."""
    assert exact_color(Graph(0)).colors == ()


@pytest.mark.parametrize("seed", range(20))
def test_exact_coloring_agrees_with_brute_force(
    seed: int,
    from_networkx: Callable[[nx.Graph], Graph],
) -> None:
    """Random graphs get exactly as many colors as an exhaustive search needs."""
    g = from_networkx(nx.gnp_random_graph(7 + seed % 5, 0.25 + (seed % 4) / 8, seed=seed))
    coloring = exact_color(g)

    coloring.verify(g)
    assert coloring.color_count == brute_chromatic(g)


def test_exact_coloring_budget() -> None:
    """A search that needs more nodes than allowed stops with BudgetExceededError."""
    with pytest.raises(BudgetExceededError) as info:
        exact_color(catalog.petersen(), node_budget=1)

    assert info.value.exit_code == 3


def test_alpha2_coloring_uses_complement_matchings(co_petersen: Graph, c5: Graph) -> None:
    """Without three pairwise nonadjacent vertices, color classes are pairs and singletons."""
    for g, expected in ((co_petersen, 5), (c5, 3), (catalog.complete(4), 4)):
        coloring = color_alpha2(g)

        coloring.verify(g)
        assert coloring.color_count == expected
        assert all(len(part) <= 2 for part in coloring.classes())


def test_alpha2_coloring_rejects_larger_stable_sets() -> None:
    """Three pairwise nonadjacent vertices break the precondition."""
    with pytest.raises(PreconditionError):
        color_alpha2(catalog.empty(3))


def test_list_coloring_of_anchored_cliques() -> None:
    """Three cliques with designated colors are colored from their lists."""
    inst = _anchored_lists(ANCHORED)
    inst.validate()
    assignment = l_color_three_cliques(inst)

    assert sorted(assignment) == list(range(5, 14))
    assert inst.check(assignment) is None
    assert brute_list_color(inst) is not None
    assert inst.to_dict()["designated"] == [4, 0, 2]


def test_list_coloring_across_clique_edges() -> None:
    """Edges between the cliques are respected."""
    inst = _anchored_lists(CROSSED)
    assignment = l_color_three_cliques(inst)

    assert inst.check(assignment) is None
    assert assignment[5] != assignment[8]
    assert assignment[8] != assignment[11]


def test_list_coloring_with_a_single_vertex_clique() -> None:
    """A one-vertex clique takes its designated color and the rest is finished exactly."""
    g = Graph(5, [(0, 1), (2, 3), (0, 2)])
    inst = ListInstance.build(g, [(0, 1), (2, 3), (4,)], [{0, 1}, {0, 1}, {2}], [0, 1, 2])
    assignment = l_color_three_cliques(inst)

    assert inst.check(assignment) is None
    assert assignment[4] == 2


@pytest.mark.parametrize(
    ("g", "cliques", "lists", "expected"),
    [
        (
            Graph(6, [(0, 1), (2, 3), (4, 5), (0, 2), (1, 3)]),
            [(0, 1), (2, 3), (4, 5)],
            [{0, 3}, {1, 3}, {2, 4}],
            {0: 3, 3: 3},
        ),
        (
            Graph(5, [(1, 2), (3, 4), (0, 1)]),
            [(0,), (1, 2), (3, 4)],
            [{0}, {0, 1}, {2, 5}],
            {0: 0, 2: 0},
        ),
        (
            Graph(4, [(2, 3), (0, 1)]),
            [(0,), (1,), (2, 3)],
            [{0}, {0, 1}, {2, 3}],
            {0: 0, 1: 1},
        ),
    ],
    ids=["spare-color-pair", "designated-pair", "designated-single"],
)
def test_list_coloring_reduction_steps(
    g: Graph,
    cliques: list[tuple[int, ...]],
    lists: list[set[int]],
    expected: dict[int, int],
) -> None:
    """Spare and designated colors go to a nonadjacent pair or to a lone clique vertex."""
    inst = ListInstance.build(g, cliques, lists, [0, 1, 2])
    assignment = l_color_three_cliques(inst)

    assert inst.check(assignment) is None
    assert {v: assignment[v] for v in expected} == expected


def _random_list_instance(rng: random.Random) -> ListInstance:
    """Draw three cliques of one to four vertices with lists that meet every condition."""
    sizes = [rng.randint(1, 4) for _ in range(3)]
    starts = [0, sizes[0], sizes[0] + sizes[1]]
    cliques = [list(range(start, start + size)) for start, size in zip(starts, sizes, strict=True)]
    owner = {v: i for i, q in enumerate(cliques) for v in q}
    cross: set[tuple[int, int]] = set()

    for i, j in itertools.combinations(range(3), 2):
        ends = rng.sample(cliques[i], rng.randint(0, min(sizes[i], sizes[j])))
        cross |= set(zip(ends, rng.sample(cliques[j], len(ends)), strict=True))

    def crossing(u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in cross

    def open_triangle() -> tuple[int, int] | None:
        for v, b, c in itertools.permutations(owner, 3):
            if (
                len({owner[v], owner[b], owner[c]}) == 3
                and crossing(v, b)
                and crossing(v, c)
                and not crossing(b, c)
            ):
                return min(v, b), max(v, b)

        return None

    while (edge := open_triangle()) is not None:
        cross.discard(edge)

    lists = [{0}, {1}, {2}]

    for i in range(3):
        if rng.random() < 0.5:
            lists[rng.choice([j for j in range(3) if j != i])].add(i)

    colors = itertools.count(3)

    while any(len(lists[i]) < sizes[i] for i in range(3)) or rng.random() < 0.3:
        c = next(colors)

        for i in rng.sample(range(3), rng.randint(1, 2)):
            lists[i].add(c)

    edges = [e for q in cliques for e in itertools.combinations(q, 2)]
    return ListInstance.build(Graph(len(owner), edges + sorted(cross)), cliques, lists, [0, 1, 2])


def _check_random_list_instances(seed: int, count: int) -> None:
    rng = random.Random(seed)  # noqa: S311

    for _ in range(count):
        inst = _random_list_instance(rng)
        inst.validate()
        assignment = l_color_three_cliques(inst)

        assert sorted(assignment) == list(inst.vertices)
        assert inst.check(assignment) is None, inst.to_dict()
        assert brute_list_color(inst) is not None, inst.to_dict()


@pytest.mark.parametrize("seed", range(4))
def test_list_coloring_of_random_instances(seed: int) -> None:
    """Random instances that meet every condition are always list colored."""
    _check_random_list_instances(seed, 50)


@pytest.mark.slow
def test_list_coloring_of_a_thousand_random_instances() -> None:
    """A thousand random instances that meet every condition are all list colored."""
    _check_random_list_instances(1000, 1000)


@pytest.mark.parametrize(
    ("lists", "designated", "message"),
    [
        ([{3, 4, 0}, {4, 0, 1}, {1, 2, 3}], [4, 4, 2], "not distinct"),
        ([{3, 4, 0}, {4, 0, 1}, {1, 2, 4}], [3, 0, 2], "in all three lists"),
        ([{3, 4}, {4, 0, 1}, {1, 2, 3}], [4, 0, 2], "fewer colors"),
        ([{3, 4, 0}, {4, 0, 1}, {1, 2, 3}], [1, 0, 2], "not in L"),
    ],
    ids=["designated-repeat", "shared-color", "short-list", "designated-missing"],
)
def test_list_instance_conditions(
    lists: list[set[int]],
    designated: list[int],
    message: str,
) -> None:
    """Instances that break a condition are rejected before any coloring."""
    inst = ListInstance.build(ANCHORED, [(5, 6, 7), (8, 9, 10), (11, 12, 13)], lists, designated)

    with pytest.raises(PreconditionError, match=message):
        l_color_three_cliques(inst)


def test_list_instance_cliques_must_be_cliques() -> None:
    """A clique with a missing edge is rejected."""
    inst = ListInstance.build(Graph(4), [(0, 1), (2,), (3,)], [{0, 1}, {1}, {2}], [0, 1, 2])

    with pytest.raises(PreconditionError, match="not a clique"):
        inst.validate()


def test_unsatisfiable_lists_have_no_brute_force_answer() -> None:
    """Brute force reports instances without a list coloring."""
    triangle = catalog.complete(3)
    inst = ListInstance.build(triangle, [(0,), (1,), (2,)], [{0}, {0}, {1}], [0, 0, 1])

    assert brute_list_color(inst) is None


def test_good_stable_set_lowers_the_clique_number() -> None:
    """One vertex of each big X set forms a stable set meeting every largest clique."""
    s = classify_c5(ANCHORED, HOLE)

    assert x_anchor(s) == 1
    assert good_stable_set(ANCHORED, s) == StableSet((5, 8, 11))
    assert StableSet((5, 8, 11)).mask == (1 << 5) | (1 << 8) | (1 << 11)


def test_good_stable_set_needs_a_big_x_set() -> None:
    """Without an X set of two vertices there is nothing to peel."""
    g = build_c5_instance((0, 1, 1, 0, 1))

    with pytest.raises(PreconditionError):
        good_stable_set(g, classify_c5(g, HOLE))


@pytest.mark.parametrize("g", [ANCHORED, CROSSED], ids=["anchored", "crossed"])
def test_peeling_cases_use_the_clique_number(g: Graph) -> None:
    """Both peeling colorings are optimal on X sets of three at an anchor."""
    s = classify_c5(g, HOLE)

    for color in (color_three_xi_case, color_k_colorable_case):
        coloring = color(g, s)

        coloring.verify(g)
        assert coloring.color_count == 5
        assert coloring.color_count == brute_chromatic(g)


def test_k_colorable_case_peels_down_to_five() -> None:
    """X sets of four need one peeling step before the list coloring."""
    g = build_c5_instance((0, 4, 4, 0, 4))
    coloring = color_k_colorable_case(g, classify_c5(g, HOLE))

    coloring.verify(g)
    assert coloring.color_count == 6


@pytest.mark.parametrize(
    ("x_sizes", "y_position", "omega", "x_colors"),
    [
        ((0, 2, 0, 0, 0), 1, 5, {3, 4}),
        ((0, 2, 0, 0, 0), 4, 5, {4, 0}),
        ((0, 3, 0, 0, 0), 1, 6, None),
    ],
    ids=["y-before", "y-after", "peeled"],
)
def test_k_colorable_case_with_a_y_vertex(
    x_sizes: tuple[int, ...],
    y_position: int,
    omega: int,
    x_colors: set[int] | None,
) -> None:
    """A Y vertex takes the color before its first hole vertex and X avoids it."""
    g = build_c5_instance(x_sizes, y_positions=(y_position,))
    s = classify_c5(g, HOLE)
    coloring = color_k_colorable_case(g, s)

    coloring.verify(g)
    assert clique_number(g).value == omega
    assert coloring.color_count == omega == brute_chromatic(g)

    if x_colors is not None:
        assert coloring.colors[:5] == (0, 1, 2, 3, 4)
        assert coloring.colors[s.y[y_position][0]] == (y_position - 1) % 5
        assert {coloring.colors[v] for v in s.x[1]} == x_colors


def test_five_coloring_rejects_three_x_vertices_next_to_y() -> None:
    """Three X vertices beside a Y vertex make a 6-clique, so a 5-coloring is refused."""
    g = build_c5_instance((0, 3, 3, 0, 3), y_positions=(1,))

    with pytest.raises(StructureViolationError, match="next to Y"):
        _five_coloring(g, classify_c5(g, HOLE), 1)


@pytest.mark.slow
def test_k_colorable_case_on_anchored_members_with_y(
    anchored_members: Callable[[], Iterator[Graph]],
) -> None:
    """Anchored members with Y vertices are colored with exactly their clique number."""
    checked = 0

    for g in anchored_members():
        s = classify_c5(g, HOLE)

        if not any(s.y) or (omega := clique_number(g).value) < 5:
            continue

        coloring = color_k_colorable_case(g, s)

        coloring.verify(g)
        assert coloring.color_count == omega, list(g.edges())

        if g.vertex_count <= 12:
            assert omega == brute_chromatic(g), list(g.edges())

        checked += 1

    assert checked >= 100


def test_three_xi_case_on_a_bare_hole(c5: Graph) -> None:
    """An odd hole alone needs three colors."""
    assert color_three_xi_case(c5, classify_c5(c5, HOLE)).color_count == 3


@pytest.mark.parametrize(
    ("g", "color"),
    [
        (build_c5_instance((1, 0, 0, 0, 0), r_size=1), color_k_colorable_case),
        (build_c5_instance((1, 1, 1, 1, 1)), color_k_colorable_case),
        (build_c5_instance((0, 1, 1, 0, 1)), color_k_colorable_case),
        (build_c5_instance((0, 0, 0, 0, 0), y_positions=(0,)), color_three_xi_case),
    ],
    ids=["r-nonempty", "no-anchor", "small-clique-number", "y-nonempty"],
)
def test_peeling_preconditions(g: Graph, color: Callable[..., object]) -> None:
    """Partitions outside the peeling cases are rejected."""
    with pytest.raises(PreconditionError):
        color(g, classify_c5(g, HOLE))


@pytest.mark.parametrize(
    ("name", "stage", "atoms", "colors"),
    [
        ("co-petersen", Stage.ALPHA2, 1, 5),
        ("cycle-7", Stage.C7, 1, 3),
        ("path-5", Stage.ALPHA2, 4, 2),
        ("complete-6", Stage.ALPHA2, 1, 6),
    ],
)
def test_pipeline_stages(name: str, stage: Stage, atoms: int, colors: int) -> None:
    """Each atom is counted under the rule that colored it."""
    g = catalog.named(name)
    stages: collections.Counter[Stage] = collections.Counter()
    coloring = color_class_graph(g, stages=stages)

    coloring.verify(g)
    assert coloring.color_count == colors
    assert stages == collections.Counter({stage: atoms})


def test_pipeline_colors_components_separately() -> None:
    """Components are colored on their own and the largest one decides."""
    g = Graph(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    stages: collections.Counter[Stage] = collections.Counter()

    assert color_class_graph(g, stages=stages).color_count == 3
    assert stages == collections.Counter({Stage.ALPHA2: 2, Stage.TRIVIAL: 1})


def test_pipeline_on_an_anchored_instance() -> None:
    """A member with a 5-hole and three X sets of three needs five colors."""
    coloring = color_class_graph(ANCHORED)

    coloring.verify(ANCHORED)
    assert coloring.color_count == brute_chromatic(ANCHORED) == 5


def test_pipeline_removes_low_degree_vertices(monkeypatch: pytest.MonkeyPatch) -> None:
    """Above the clique number threshold a low-degree vertex is colored last."""
    g = build_c5_instance((1, 1, 0, 0, 0), cross_edges=[(5, 6)])
    monkeypatch.setattr(pipeline, "OMEGA_THRESHOLD", 3)
    monkeypatch.setattr(pipeline, "DEGREE_THRESHOLD", 2)
    stages: collections.Counter[Stage] = collections.Counter()
    coloring = color_class_graph(g, stages=stages)

    coloring.verify(g)
    assert coloring.color_count == 3
    assert stages[Stage.LOW_DEGREE] == 1


def test_pipeline_rejects_non_members(claw: Graph) -> None:
    """A forbidden induced subgraph stops the pipeline with its witness."""
    with pytest.raises(NotInClassError) as info:
        color_class_graph(claw)

    assert info.value.kind == "claw"
    assert info.value.vertices == (0, 1, 2, 3)
    assert info.value.exit_code == 1


def test_pipeline_budget_and_strictness() -> None:
    """The node budget reaches the exact solver and strictness does not change the answer."""
    c7 = catalog.cycle(7)

    with pytest.raises(BudgetExceededError):
        color_class_graph(c7, SolverOptions(node_budget=1))

    assert color_class_graph(c7, SolverOptions(strict=False)).color_count == 3


@pytest.mark.parametrize(
    "kwargs",
    [{"node_budget": 0}, {"cutset_scan_limit": -1}],
    ids=["budget", "scan-limit"],
)
def test_solver_options_are_checked(kwargs: dict[str, int]) -> None:
    """Budgets below one and negative scan limits are rejected."""
    with pytest.raises(PreconditionError):
        SolverOptions(**kwargs)


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("strategy", [Strategy.RANDOM_FILTERED, Strategy.CONSTRUCTIVE_C5])
def test_pipeline_agrees_with_brute_force(seed: int, strategy: Strategy) -> None:
    """Generated members get exactly as many colors as an exhaustive search needs."""
    for g in generate(GenSpec(6, 12, seed=seed, strategy=strategy, count=5)):
        coloring = color_class_graph(g)

        coloring.verify(g)
        assert coloring.color_count == brute_chromatic(g), list(g.edges())


def test_pipeline_on_every_small_member() -> None:
    """Every labeled member on at most five vertices is colored optimally."""
    for g in generate(GenSpec(1, 5)):
        assert color_class_graph(g).color_count == brute_chromatic(g), list(g.edges())


@pytest.mark.slow
def test_pipeline_on_every_member_with_six_vertices() -> None:
    """Every labeled member on six vertices is colored optimally."""
    for g in generate(GenSpec(6, 6)):
        assert color_class_graph(g).color_count == brute_chromatic(g), list(g.edges())


@pytest.mark.slow
def test_pipeline_on_every_member_up_to_seven_vertices(
    from_networkx: Callable[[nx.Graph], Graph],
) -> None:
    """Every member on one to seven vertices, up to isomorphism, is colored optimally."""
    for h in nx.graph_atlas_g()[1:]:
        if in_class(g := from_networkx(h)):
            assert color_class_graph(g).color_count == brute_chromatic(g), list(g.edges())


@pytest.mark.slow
def test_pipeline_on_a_thousand_generated_members() -> None:
    """Members on eight to eleven vertices, built or filtered, are colored optimally."""
    built = 0

    for seed in range(25):
        spec = GenSpec(8, 11, seed=seed, strategy=Strategy.CONSTRUCTIVE_C5, count=40, attempts=500)

        for g in generate(spec):
            assert color_class_graph(g).color_count == brute_chromatic(g), list(g.edges())
            built += 1

        for g in generate(GenSpec(8, 11, seed=seed, strategy=Strategy.RANDOM_FILTERED, count=8)):
            assert color_class_graph(g).color_count == brute_chromatic(g), list(g.edges())

    assert built >= 1000
