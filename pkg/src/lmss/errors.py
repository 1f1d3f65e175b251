"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for invalid graph input or invalid arguments."""


class LoopRejected(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class DuplicateVertex(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    def __str__(self) -> str:  # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


class UnknownEdge(GraphError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class InvalidCutSides(GraphError):
    pass


class TooLarge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotAMatching(GraphError):
    pass


class HypothesisViolated(GraphError):
    """Raised when an operation's mathematical precondition fails."""


class ParseError(GraphError):
    """Malformed edge-list line or graph6 record.

    ``position`` is a 1-based line number (edge lists) or a 0-based record
    index (graph6 streams).
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position
