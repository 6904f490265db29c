"""Solver settings read from the environment, ``.env`` and the configuration file."""

from __future__ import annotations

from typing import Annotated

from clawfree.coloring.constants import DEFAULT_NODE_BUDGET, SolverOptions
from clawfree.core import fields
from clawfree.decomposition import DEFAULT_CUTSET_SCAN_LIMIT
from clawfree.util.autofields import AutoFields
from clawfree.util.logging import Canonical

__all__ = ("Settings",)

#: Namespace for settings of the coloring pipeline.
_SOLVER_NAMESPACE: str = "clawfree.solver"

#: Namespace for settings of the clique cutset decomposition.
_DECOMPOSITION_NAMESPACE: str = "clawfree.decomposition"


class Settings(Canonical, AutoFields):
    """The configurable tunables of the solver.

    Values come from environment variables first and the TOML configuration file second; the
    class attribute is used when neither sets one. 'Config.init' must have been called.
    """

    #: The number of search nodes each exact coloring call may expand.
    node_budget: Annotated[
        int,
        fields.BoundedConfigField[int](
            namespace=_SOLVER_NAMESPACE,
            env="CLAWFREE_NODE_BUDGET",
            lower_bound=1,
        ),
    ] = DEFAULT_NODE_BUDGET

    #: Whether structural facts are checked before a hole partition is trusted.
    strict: Annotated[
        bool,
        fields.ConfigField[bool](
            namespace=_SOLVER_NAMESPACE,
            env="CLAWFREE_STRICT",
            parser=fields.parse_bool,
        ),
    ] = True

    #: Vertex sets up to this size are also scanned for clique cutsets clique by clique.
    cutset_scan_limit: Annotated[
        int,
        fields.BoundedConfigField[int](
            namespace=_DECOMPOSITION_NAMESPACE,
            env="CLAWFREE_CUTSET_SCAN_LIMIT",
            lower_bound=0,
        ),
    ] = DEFAULT_CUTSET_SCAN_LIMIT

    def options(self, *, node_budget: int | None = None) -> SolverOptions:
        """Get the solver options, with an explicit node budget taking precedence."""
        return SolverOptions(
            node_budget=self.node_budget if node_budget is None else node_budget,
            strict=self.strict,
            cutset_scan_limit=self.cutset_scan_limit,
        )

    @property
    def __canonical__(self) -> dict[str, object]:
        """Get the settings for logging."""
        return {
            "node_budget": self.node_budget,
            "strict": self.strict,
            "cutset_scan_limit": self.cutset_scan_limit,
        }
