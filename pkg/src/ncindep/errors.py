"""Domain errors shared across the engine."""

from __future__ import annotations


class EngineError(Exception):
    """Base class for errors raised by moment-domain operations."""


class DegreeExceeded(EngineError):
    """A moment of higher order than the functional stores was requested.

    Moment tables are total up to a declared maximum degree; asking beyond
    it is an error, never a silent zero.
    """

    def __init__(self, monomial, max_degree):
        self.monomial = monomial
        self.max_degree = max_degree
        super().__init__(
            "monomial %r has length %d, beyond the stored maximum degree %d"
            % (monomial, len(monomial), max_degree)
        )


class RegimeMismatch(EngineError):
    """Unital/non-unital (or graded/evenness) requirements were violated."""


class StateDocumentError(EngineError):
    """A state or probability-space document failed validation."""


class ExpressionError(EngineError):
    """An expression failed to parse; carries the byte offset of the fault."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__("%s (at offset %d)" % (message, offset))
