"""Exception types shared across the package.

The CLI maps these onto exit codes: usage problems exit 64, invalid
input exits 65, and a failed internal verification exits 70.
"""


class QuadembedError(Exception):
    """Base class for all errors raised by this package."""


class WordParseError(QuadembedError):
    """Malformed word text. `position` is the character offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class PresentationError(QuadembedError):
    """Malformed or invalid presentation text or structure."""


class TableError(QuadembedError):
    """Malformed Cayley table document or misuse of a table."""


class NotQuadraticError(QuadembedError):
    """A word that does not define a quadratic equation."""


class BackendMismatchError(QuadembedError):
    """Solution values or operations incompatible with the group backend."""


class UndecidableError(QuadembedError):
    """A solvability question outside the implemented decision procedures."""


class InfeasibleError(QuadembedError):
    """Parameters for which no object of the requested kind exists."""


class VerificationError(QuadembedError):
    """An internal consistency check failed; downstream output is unsafe."""
