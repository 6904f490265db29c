"""Constants and tunables used by the coloring engines."""

from __future__ import annotations

import dataclasses

from clawfree.core.exceptions import PreconditionError
from clawfree.decomposition import DEFAULT_CUTSET_SCAN_LIMIT

__all__ = (
    "DEFAULT_NODE_BUDGET",
    "DEFAULT_OPTIONS",
    "DEGREE_THRESHOLD",
    "OMEGA_THRESHOLD",
    "SolverOptions",
)

#: Atoms with a smaller clique number are colored by the exact solver.
OMEGA_THRESHOLD: int = 14

#: A vertex of at most this degree is removed and given a free color afterwards.
DEGREE_THRESHOLD: int = OMEGA_THRESHOLD - 1

#: The number of search nodes the exact solver may expand before giving up.
DEFAULT_NODE_BUDGET: int = 2_000_000


@dataclasses.dataclass(frozen=True, slots=True)
class SolverOptions:
    """Tunables passed down through the coloring pipeline.

    Parameters
    ----------
    node_budget : int
        The search node budget of every exact solver call.
    strict : bool
        Whether structural facts are checked before a hole partition is trusted.
    cutset_scan_limit : int
        Vertex sets up to this size are also scanned for clique cutsets clique by clique.

    Raises
    ------
    PreconditionError
        Raised if 'node_budget' is below one or 'cutset_scan_limit' is negative.

    """

    node_budget: int = DEFAULT_NODE_BUDGET
    strict: bool = True
    cutset_scan_limit: int = DEFAULT_CUTSET_SCAN_LIMIT

    def __post_init__(self) -> None:
        if self.node_budget < 1:
            raise PreconditionError(f"node budget must be at least 1; got {self.node_budget}")

        if self.cutset_scan_limit < 0:
            raise PreconditionError(
                f"cutset scan limit must not be negative; got {self.cutset_scan_limit}",
            )


#: The options used when none are given.
DEFAULT_OPTIONS = SolverOptions()
