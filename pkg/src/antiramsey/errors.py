"""Shared exception types.

Three failure modes matter to callers (and map to distinct CLI exit codes):
malformed input, parameters outside the range where a formula is valid, and
an exhausted search budget.  Everything else is a plain ValueError.
"""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed coloring file or forest specification.

    ``line`` is the 1-based line number for file input, or None for
    single-string input such as a forest spec.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class OutOfRegionError(ValueError):
    """Parameters fall outside the region where a closed form is established."""


class BudgetExceededError(RuntimeError):
    """A bounded search ran out of nodes or wall time before deciding.

    ``nodes`` counts the attempts actually spent.  ``best`` optionally carries
    the best partial result (for searches that can report a sound lower bound).
    """

    def __init__(self, message: str, nodes: int, best=None):
        super().__init__(message)
        self.nodes = nodes
        self.best = best
