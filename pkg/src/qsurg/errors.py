"""Exception types shared across the package."""


class QsurgError(Exception):
    """Base class for all package errors."""


class ShapeError(QsurgError):
    """Matrix or vector dimensions do not conform."""


class CommutationError(QsurgError):
    """Parity-check matrices do not satisfy px @ pz.T = 0."""


class ParseError(QsurgError):
    """Polynomial or file text could not be parsed.

    Carries the character position of the failure when known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InvalidSpec(QsurgError):
    """Family spec parameters are invalid."""


class NotALogical(QsurgError):
    """Vector is not a logical operator of the stated basis."""


class NoSpan(QsurgError):
    """No monic span (hypergraph isomorphism) exists between subcomplexes."""


class NotIrreducible(QsurgError):
    """Logical operator fails the irreducibility requirement."""


class Overlap(QsurgError):
    """Internal merge rejected: logicals share a qubit or a check."""


class NoLogicals(QsurgError):
    """Code has k = 0, so it has no logical operators."""


class CapExceeded(QsurgError):
    """No logical found up to the requested weight cap."""
