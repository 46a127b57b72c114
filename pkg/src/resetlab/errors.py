"""Exception types shared across the package."""


class ResetLabError(Exception):
    """Base class for all resetlab errors."""


class DimensionError(ResetLabError, ValueError):
    """Operands live on state sets of different sizes."""


class DomainError(ResetLabError, ValueError):
    """An argument is outside the domain the operation is defined on."""


class NotOnePointError(DomainError):
    """The map is not a one-point singular (kernel type (k, 1, ..., 1))."""


class DiagonalPairError(DomainError):
    """A relation pair has equal components; relations here are off-diagonal."""


class ScopeCappedError(ResetLabError):
    """Exact computation refused: the instance exceeds its size gate."""


class CapacityError(ScopeCappedError):
    """An enumeration exceeded its configured cap."""

    def __init__(self, message, partial_count=None):
        super().__init__(message)
        self.partial_count = partial_count


class ParseError(ResetLabError, ValueError):
    """Malformed automaton file; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
