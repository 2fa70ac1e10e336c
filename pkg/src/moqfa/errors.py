"""Exception types shared across the package."""

from __future__ import annotations


class FormatError(ValueError):
    """A text artifact (DFA file, automaton file) is malformed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PatternError(ValueError):
    """A subsequence pattern violates its invariants."""


class ResourceLimitError(RuntimeError):
    """A computation exceeded its configured size budget."""
