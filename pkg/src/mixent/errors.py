"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["DomainError", "OracleSizeError", "ScenarioParseError"]


class DomainError(ValueError):
    """An input lies outside the physical or mathematical domain of an operation.

    Raised for things like negative counts, non-positive volumes or
    temperatures, mismatched vector lengths, or scenario constraints that do
    not hold.  Subclasses ValueError so callers that only care about "bad
    input" can catch the builtin.
    """


class OracleSizeError(DomainError):
    """An exhaustive enumeration request exceeds the hard-coded size guard."""


class ScenarioParseError(ValueError):
    """A scenario file failed to parse.

    Carries enough position information to point an editor at the offending
    token: ``source`` (path or "<string>"), 1-based ``line`` and ``column``.
    Document-level problems (e.g. a missing required key) have no single
    token to blame and use ``line=None``.
    """

    def __init__(
        self,
        message: str,
        *,
        source: str = "<string>",
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        self.source = source
        self.line = line
        self.column = column
        if line is None:
            location = source
        elif column is None:
            location = f"{source}:{line}"
        else:
            location = f"{source}:{line}:{column}"
        super().__init__(f"{location}: {message}")
