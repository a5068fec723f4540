"""Exception hierarchy.

Every error raised deliberately by the library derives from :class:`SkewError`,
so callers (and the CLI) can separate domain failures from programming bugs.
"""


class SkewError(Exception):
    """Base class for all library errors."""


class InversionOfZero(SkewError, ZeroDivisionError):
    pass


class UnsupportedRing(SkewError):
    pass


class NotEnumerable(UnsupportedRing):
    pass


class NoFiniteCoordinatization(UnsupportedRing):
    pass


class ContextMismatch(SkewError):
    pass


class DivisionByZeroPoly(SkewError, ZeroDivisionError):
    pass


class SigmaNotInvertible(SkewError):
    pass


class DegreeTooSmall(SkewError):
    pass


class BothZero(SkewError):
    pass


class EmptySet(SkewError):
    pass


class ZeroPolynomial(SkewError):
    pass


class EmptySequence(SkewError):
    pass


class InvalidSequence(SkewError):
    pass


class ValidationMissing(InvalidSequence):
    """An operation needs a validated multiplicity sequence and got a raw one."""


class NotPIndependent(SkewError):
    pass


class ZeroPoint(SkewError):
    pass


class LinearSystemError(SkewError):
    """Base for failures of :func:`skewmult.linalg.solve_left`.

    ``column`` is the certificate: the index of an unknown with no pivot
    (for :class:`NonUnique`) or of the inconsistent equation (for
    :class:`NoSolution`).
    """

    def __init__(self, message, column=None):
        super().__init__(message)
        self.column = column


class NoSolution(LinearSystemError):
    pass


class NonUnique(LinearSystemError):
    pass


class DimensionMismatch(SkewError, ValueError):
    pass


class ParseError(SkewError, ValueError):
    def __init__(self, position, expected, text=None):
        self.position = position
        self.expected = expected
        self.text = text
        msg = f"parse error at offset {position}: expected {expected}"
        if text is not None:
            msg += f"\n  {text}\n  {' ' * position}^"
        super().__init__(msg)
