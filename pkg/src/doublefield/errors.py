"""Exception hierarchy for the doublefield package."""


class DoubleFieldError(Exception):
    """Base class for all library errors."""


class InputError(DoubleFieldError):
    """Malformed or inadmissible user input."""


class ParseError(InputError):
    """Expression or divisor-spec syntax error.

    Carries the byte offset of the failure and the set of tokens that
    would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        super().__init__(message)
        self.offset = offset
        self.expected = tuple(sorted(expected))


class DegreeBound(InputError):
    """Polynomial degree exceeds the configured factorization bound."""


class NotDegreeOne(InputError):
    """Operation requires a binary prime of degree one in x."""


class EqualIsoms(InputError):
    """Different divisor of an isomorphism with itself is undefined."""


class NotCoprime(InputError):
    """Divisor arguments must have disjoint supports."""


class CommonSupport(InputError):
    """Arakelov intersection needs disjoint horizontal supports."""


class UncertifiedFactor(DoubleFieldError):
    """An uncertified bivariate factor collides with the queried place."""


class NonGeneric(DoubleFieldError):
    """Multiplicities cannot be soundly read off a specialization."""


class PointwiseUnavailable(DoubleFieldError):
    """Pointwise residue would require number-field arithmetic."""


class ShiftExhausted(DoubleFieldError):
    """No valid chart shift below the configured bound."""


class PrecisionFailure(DoubleFieldError):
    """Numeric certification failed at the working precision (retryable)."""


class MoveFailure(DoubleFieldError):
    """No disjoint-support principal move found within the schedule."""
