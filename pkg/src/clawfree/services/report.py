"""The result of one command-line run, printable as text or JSON."""

from __future__ import annotations

import dataclasses
import json
import typing

from clawfree.util.logging import Canonical

if typing.TYPE_CHECKING:
    from typing import Any

__all__ = ("RunReport",)

#: Keys that always appear first in the JSON form, in this order.
_HEAD_KEYS = ("command", "n", "m")


@dataclasses.dataclass(slots=True)
class RunReport(Canonical):
    """What a command computed about its input graph.

    The JSON form always has 'command', 'n', 'm' and 'timing_ms'; result keys such as
    'chromatic_number', 'coloring', 'witness', 'chi_prime' or 'atoms' appear when the command
    produced them.
    """

    #: The subcommand that ran.
    command: str

    #: The number of vertices of the input graph.
    n: int = 0

    #: The number of edges of the input graph.
    m: int = 0

    #: Result keys in the order they were added.
    payload: dict[str, Any] = dataclasses.field(default_factory=dict)

    #: Multi-line text shown instead of a payload key in the text form.
    blocks: dict[str, str] = dataclasses.field(default_factory=dict)

    #: Wall-clock time of the command in milliseconds.
    timing_ms: float = 0.0

    def add(self, **values: Any) -> None:
        """Add result keys to the report."""
        self.payload.update(values)

    def add_block(self, **blocks: str) -> None:
        """Set the text form of result keys; the JSON form keeps the payload value."""
        self.blocks.update(blocks)

    def to_dict(self) -> dict[str, Any]:
        """Get the JSON form of the report."""
        return {
            "command": self.command,
            "n": self.n,
            "m": self.m,
            **{k: v for k, v in self.payload.items() if k not in _HEAD_KEYS},
            "timing_ms": round(self.timing_ms, 3),
        }

    def to_json(self) -> str:
        """Serialize the report to a single line of JSON."""
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_text(self) -> str:
        """Get a human-readable form of the report, one ``key: value`` line per result key.

        Keys with a text block are printed as the key alone followed by the block, indented.
        """
        lines = [f"{self.command}: n={self.n} m={self.m}"]

        for key, value in self.payload.items():
            if (block := self.blocks.get(key)) is not None:
                lines.append(f"{key}:")
                lines += [f"  {line}" for line in block.splitlines()]
                continue

            text = value if isinstance(value, str) else json.dumps(value)
            lines.append(f"{key}: {text}")

        return "\n".join(lines)

    @property
    def __canonical__(self) -> dict[str, Any]:
        """Get the command and graph size for logging."""
        return {"command": self.command, "n": self.n, "m": self.m}
