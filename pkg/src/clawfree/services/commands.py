"""The subcommands of the command-line interface.

Every handler fills in a 'RunReport' and returns an exit status; printing, timing and error
handling happen in 'clawfree.services.run'.
"""

from __future__ import annotations

import argparse
import collections
import json
import pathlib
import typing

import structlog

from clawfree import __version__
from clawfree.chromatic_index import chromatic_index
from clawfree.coloring.exact import exact_color
from clawfree.coloring.pipeline import color_class_graph
from clawfree.core.exceptions import ExitStatus, InputError
from clawfree.decomposition import decompose
from clawfree.graph.enum import GraphFormat
from clawfree.graph.io import save_graph
from clawfree.graph.models import Coloring
from clawfree.graph.operations import components, induced_subgraph
from clawfree.oracle.brute import brute_chromatic, brute_edge_chromatic
from clawfree.oracle.enum import Strategy
from clawfree.oracle.generate import GenSpec, generate
from clawfree.recognition.cliques import clique_number
from clawfree.recognition.holes import find_hole
from clawfree.recognition.patterns import find_class_violation
from clawfree.structure.c5 import classify_c5, k_vertex_profile
from clawfree.structure.c7 import classify_c7, validate_c7_claims
from clawfree.structure.claims import validate_claims
from clawfree.util import bits
from clawfree.util.logging import canonical_event

if typing.TYPE_CHECKING:
    from collections.abc import Callable

    from clawfree.coloring.enum import Stage
    from clawfree.graph.models import Graph
    from clawfree.services.report import RunReport
    from clawfree.services.settings import Settings

    type Handler = Callable[..., ExitStatus]

__all__ = (
    "COMMANDS",
    "GRAPH_COMMANDS",
    "build_parser",
)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()

#: The handler of every subcommand, by name.
COMMANDS: dict[str, Handler] = {}

#: Subcommands that read a graph file before their handler runs.
GRAPH_COMMANDS: frozenset[str] = frozenset(
    {"recognize", "color", "atoms", "structure", "chromatic-index", "verify", "oracle"},
)


def _command(name: str) -> Callable[[Handler], Handler]:
    """Register a handler under a subcommand name and give it a canonical log line."""

    def decorator(func: Handler) -> Handler:
        handler = canonical_event(command=name)(func)
        COMMANDS[name] = handler
        return handler

    return decorator


def _positive(value: str) -> int:
    number = int(value)

    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer; got {value}")

    return number


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="clawfree",
        description="Recognize, decompose and optimally color graphs of the claw-free class.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", type=pathlib.Path, help="a TOML configuration file")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")

    graph_input = argparse.ArgumentParser(add_help=False)
    graph_input.add_argument("graph", type=pathlib.Path, help="a DIMACS or edge-list graph file")
    graph_input.add_argument(
        "--format",
        choices=[str(f) for f in GraphFormat],
        help="the graph file format; guessed from the suffix by default",
    )

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument(
        "--budget",
        type=_positive,
        help="search node budget of the exact solver; overrides CLAWFREE_NODE_BUDGET",
    )

    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    sub.add_parser(
        "recognize",
        parents=[graph_input, common],
        help="check class membership and report a forbidden subgraph",
    )
    color = sub.add_parser(
        "color",
        parents=[graph_input, common, budget],
        help="color a class member optimally",
    )
    color.add_argument(
        "--force",
        action="store_true",
        help="color graphs outside the class with the exact solver",
    )
    sub.add_parser(
        "atoms",
        parents=[graph_input, common],
        help="decompose along clique cutsets",
    )
    sub.add_parser(
        "structure",
        parents=[graph_input, common],
        help="partition the vertices around a 7-hole or 5-hole and check the structure",
    )
    sub.add_parser(
        "chromatic-index",
        parents=[graph_input, common, budget],
        help="color the edges of a graph without four disjoint edges",
    )
    verify = sub.add_parser(
        "verify",
        parents=[graph_input, common],
        help="check a coloring file against a graph",
    )
    verify.add_argument("coloring", type=pathlib.Path, help="a JSON coloring or color report")

    gen = sub.add_parser("gen", parents=[common], help="write generated class members to files")
    gen.add_argument("--n", type=int, required=True, help="the number of vertices")
    gen.add_argument("--seed", type=int, default=0, help="the seed of random strategies")
    gen.add_argument(
        "--strategy",
        choices=[str(s) for s in Strategy],
        default=str(Strategy.RANDOM_FILTERED),
    )
    gen.add_argument("--count", type=int, default=10, help="the number of graphs to write")
    gen.add_argument("--output-dir", type=pathlib.Path, default=pathlib.Path())

    oracle = sub.add_parser(
        "oracle",
        parents=[common],
        help="compute a brute-force reference value",
    )
    oracle.add_argument("quantity", choices=["chi", "chi-prime"])
    oracle.add_argument("graph", type=pathlib.Path, help="a DIMACS or edge-list graph file")
    oracle.add_argument("--format", choices=[str(f) for f in GraphFormat])

    return parser


@_command("recognize")
def _recognize(
    args: argparse.Namespace,  # noqa: ARG001
    report: RunReport,
    settings: Settings,  # noqa: ARG001
    g: Graph,
) -> ExitStatus:
    witness = find_class_violation(g)
    report.add(in_class=witness is None)

    if witness is None:
        return ExitStatus.OK

    report.add(witness=witness.to_dict())
    return ExitStatus.NOT_IN_CLASS


@_command("color")
def _color(
    args: argparse.Namespace,
    report: RunReport,
    settings: Settings,
    g: Graph,
) -> ExitStatus:
    options = settings.options(node_budget=args.budget)
    clique = clique_number(g)

    if args.force and (witness := find_class_violation(g)) is not None:
        _log.info("Coloring a non-member with the exact solver.", kind=str(witness.kind))
        coloring = exact_color(g, node_budget=options.node_budget)
        report.add(witness=witness.to_dict())
    else:
        stages: collections.Counter[Stage] = collections.Counter()
        coloring = color_class_graph(g, options, stages=stages)
        report.add(stages={str(k): n for k, n in sorted(stages.items())})

    coloring = coloring.normalized()
    coloring.verify(g)
    report.add(
        chromatic_number=coloring.color_count,
        coloring=coloring.as_list(),
        clique=list(clique.vertices),
        verified=True,
    )

    return ExitStatus.OK


@_command("atoms")
def _atoms(
    args: argparse.Namespace,  # noqa: ARG001
    report: RunReport,
    settings: Settings,
    g: Graph,
) -> ExitStatus:
    atoms: list[list[int]] = []
    trees = []
    drawings = []

    for part in components(g):
        kept = bits.members(part)
        tree = decompose(induced_subgraph(g, kept), scan_limit=settings.cutset_scan_limit)
        tree.validate()
        atoms += [[kept[v] for v in leaf.vertices] for leaf in tree.leaves()]
        trees.append({"vertices": kept, "tree": tree.to_dict()})
        drawings.append(tree.render(kept))

    report.add(atoms=atoms, trees=trees)
    report.add_block(trees="\n".join(drawings))
    return ExitStatus.OK


@_command("structure")
def _structure(
    args: argparse.Namespace,  # noqa: ARG001
    report: RunReport,
    settings: Settings,  # noqa: ARG001
    g: Graph,
) -> ExitStatus:
    if (c7 := find_hole(g, 7)) is not None:
        s7 = classify_c7(g, c7)
        violations = validate_c7_claims(g, s7)
        report.add(hole=list(c7), structure=s7.to_dict())
    elif (c5 := find_hole(g, 5)) is not None:
        s5 = classify_c5(g, c5)
        violations = validate_claims(g, s5)
        report.add(hole=list(c5), structure=s5.to_dict(), profile=k_vertex_profile(g, c5))
    else:
        report.add(hole=None)
        return ExitStatus.OK

    report.add(violations=[v.to_dict() for v in violations])
    return ExitStatus.NOT_IN_CLASS if violations else ExitStatus.OK


@_command("chromatic-index")
def _chromatic_index(
    args: argparse.Namespace,
    report: RunReport,
    settings: Settings,
    g: Graph,
) -> ExitStatus:
    result = chromatic_index(g, settings.options(node_budget=args.budget))
    report.add(**result.to_dict())
    return ExitStatus.OK


def _read_coloring(path: pathlib.Path) -> Coloring:
    """Read a JSON array of colors or a JSON object with a 'coloring' array.

    Raises
    ------
    InputError
        Raised if the file cannot be read or does not hold a list of integers.

    """
    try:
        data = json.loads(path.read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: not JSON: {e}") from e

    if isinstance(data, dict):
        data = data.get("coloring")

    if not isinstance(data, list) or not all(
        isinstance(c, int) and not isinstance(c, bool) for c in data
    ):
        raise InputError(f"{path}: expected a list of integer colors")

    return Coloring(tuple(data))


@_command("verify")
def _verify(
    args: argparse.Namespace,
    report: RunReport,
    settings: Settings,  # noqa: ARG001
    g: Graph,
) -> ExitStatus:
    coloring = _read_coloring(args.coloring)
    coloring.verify(g)
    report.add(chromatic_number=coloring.color_count, verified=True)
    return ExitStatus.OK


@_command("gen")
def _gen(
    args: argparse.Namespace,
    report: RunReport,
    settings: Settings,  # noqa: ARG001
) -> ExitStatus:
    spec = GenSpec(args.n, args.n, seed=args.seed, strategy=args.strategy, count=args.count)
    args.output_dir.mkdir(parents=True, exist_ok=True)
    paths = [
        str(save_graph(graph, args.output_dir / f"{spec.strategy}-n{args.n}-s{args.seed}-{i}.col"))
        for i, graph in enumerate(generate(spec))
    ]

    report.add(files=paths)
    return ExitStatus.OK


@_command("oracle")
def _oracle(
    args: argparse.Namespace,
    report: RunReport,
    settings: Settings,  # noqa: ARG001
    g: Graph,
) -> ExitStatus:
    if args.quantity == "chi":
        report.add(chromatic_number=brute_chromatic(g))
    else:
        report.add(chi_prime=brute_edge_chromatic(g))

    return ExitStatus.OK
