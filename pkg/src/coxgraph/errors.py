"""Exception hierarchy.

Format errors (bad input text) and precondition errors (valid graph, wrong
operation) are kept apart so the CLI can map them to distinct exit codes.
"""

from __future__ import annotations


class CoxeterError(Exception):
    """Base class for every error raised by coxgraph."""


class GraphFormatError(CoxeterError, ValueError):
    """Invalid graph data. ``line`` is set when the error came from parsing."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownVertex(GraphFormatError):
    pass


class DuplicateVertex(GraphFormatError):
    pass


class DuplicateEdge(GraphFormatError):
    pass


class SelfLoop(GraphFormatError):
    pass


class BadLabel(GraphFormatError):
    pass


class GraphSyntaxError(GraphFormatError):
    pass


class PreconditionError(CoxeterError, ValueError):
    """An operation was called on an input outside its domain."""


class NotConnected(PreconditionError):
    pass


class EmptyGraph(PreconditionError):
    pass


class NotOddPrime(PreconditionError):
    pass


class BadParameter(PreconditionError):
    pass


class NotSpherical(PreconditionError):
    pass


class NotVirtuallyAbelian(PreconditionError):
    pass


class NotInfiniteEdge(PreconditionError):
    pass


class LabelTooSmall(PreconditionError):
    pass


class SourceVirtuallyZ(PreconditionError):
    pass


class EdgeLabelPrimeOrInfinite(PreconditionError):
    pass


class NotADivisor(PreconditionError):
    pass


class OddBoundaryLabel(PreconditionError):
    def __init__(self, pair: tuple[str, str], label: int):
        self.pair = pair
        self.label = label
        super().__init__(f"boundary pair {pair[0]}-{pair[1]} has odd label {label}")


class TooFewComponents(PreconditionError):
    pass


class MalformedMap(PreconditionError):
    pass


class CosetLimitExceeded(CoxeterError):
    """Coset enumeration hit its definition limit. Not a proof of infiniteness."""

    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"coset enumeration exceeded {limit} cosets")
