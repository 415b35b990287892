"""Exception types shared across the package.

Validation errors cover structurally invalid in-memory values (bad edges,
non-bijective arrangements, malformed cycles); parse errors cover defective
input text. The CLI maps validation errors to exit code 1 and parse errors
to exit code 2.
"""

from __future__ import annotations


class ValidationError(ValueError):
    """A value violates a structural invariant (self-loop, arity mismatch, ...)."""


class ParseError(ValueError):
    """Input text could not be parsed; carries a 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        super().__init__(message)

    def __str__(self) -> str:
        msg = super().__str__()
        if self.line is not None and self.column is not None:
            return f"line {self.line}, column {self.column}: {msg}"
        if self.line is not None:
            return f"line {self.line}: {msg}"
        return msg


class UnknownLabelError(ParseError):
    """An edge or arrangement references a vertex label that was never declared."""
