"""Functionality for running the library from the command line."""

from __future__ import annotations

import os
import sys
import time
import typing

import structlog

from clawfree.core import config
from clawfree.core import exceptions as exc
from clawfree.graph.io import load_graph
from clawfree.services.commands import COMMANDS, GRAPH_COMMANDS, build_parser
from clawfree.services.report import RunReport
from clawfree.services.settings import Settings
from clawfree.util import logging

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

__all__ = (
    "RunReport",
    "Settings",
    "run",
)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse the arguments, run one subcommand, print its report and handle any errors.

    Reports go to standard output, as JSON with ``--json``; log lines and error messages go to
    standard error.

    Parameters
    ----------
    argv : Sequence[str] | None
        The command-line arguments without the program name. Defaults to 'sys.argv'.

    Returns
    -------
    int
        An exit code: 0 on success, 1 for graphs outside the class, 2 for bad input, 3 when a
        search budget runs out.

    """
    logging.configure_logging()

    log: structlog.stdlib.BoundLogger = structlog.get_logger()

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else exc.ExitStatus.INPUT_ERROR

    report = RunReport(args.command)
    start = time.perf_counter()

    try:
        config.reset()
        config.init(args.config)
        settings = Settings()

        if args.command in GRAPH_COMMANDS:
            graph = load_graph(args.graph, args.format)
            report.n, report.m = graph.vertex_count, graph.edge_count
            status = COMMANDS[args.command](args, report, settings, graph)
        else:
            status = COMMANDS[args.command](args, report, settings)
    except KeyboardInterrupt:
        return os.EX_SOFTWARE
    except exc.ClawfreeError as e:
        log.error(e.message, error=type(e).__name__, command=args.command)
        print(f"clawfree: error: {e.message}", file=sys.stderr)  # noqa: T201
        return e.exit_code or os.EX_SOFTWARE
    except Exception as e:
        log.error(str(e), exc_info=e)
        return os.EX_SOFTWARE

    report.timing_ms = (time.perf_counter() - start) * 1000
    print(report.to_json() if args.json else report.to_text())  # noqa: T201

    return status
