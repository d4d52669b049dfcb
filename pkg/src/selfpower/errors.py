"""Exception types shared across the package.

The CLI maps these onto process exit codes: parse errors exit with 2,
domain and precondition errors with 3, resource errors with 4.
"""


class SelfPowerError(Exception):
    """Base class for all library errors."""


class ParseError(SelfPowerError):
    """Malformed textual input; carries the offending position when known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DomainError(SelfPowerError):
    """An argument lies outside an operation's domain."""


class PreconditionError(DomainError):
    """A checked precondition (for instance x^a = y^b) does not hold."""


class TargetShapeError(DomainError):
    """The target polynomial is reducible or not of the shape s*x^d - r."""


class UnsupportedInputError(DomainError):
    """Input outside the supported range (for instance classify with q <= 1)."""


class ResourceError(SelfPowerError):
    """An effort budget or size cap was exceeded; never a wrong answer."""
