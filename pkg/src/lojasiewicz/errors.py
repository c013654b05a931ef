"""Exception hierarchy shared by every module of the package."""


class LojasiewiczError(Exception):
    """Base class for all errors raised by this package."""


class ZeroPolynomial(LojasiewiczError):
    pass


class UnsupportedAlgebraicCoefficient(LojasiewiczError):
    """An edge polynomial has roots outside Q(i); rerun in approx mode."""

    def __init__(self, message, poly=None):
        super().__init__(message)
        self.poly = poly


class TruncationTooShallow(LojasiewiczError):
    """Two series agree on every exponent that is known for both of them."""


class NonRealPrefix(LojasiewiczError):
    pass


class IdenticalSeries(LojasiewiczError):
    pass


class NoAxisDot(LojasiewiczError):
    """The arc is a root: the Newton diagram has no dot on X = 0."""


class DegeneratePolygon(LojasiewiczError):
    pass


class BudgetExhausted(LojasiewiczError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NotReduced(LojasiewiczError):
    pass


class DoesNotVanishAtOrigin(LojasiewiczError):
    pass


class IndeterminateRatio(LojasiewiczError):
    pass


class DegenerateFit(LojasiewiczError):
    pass


class PolySyntaxError(LojasiewiczError):
    """Parse failure; ``offset`` is a byte offset into the input text."""

    def __init__(self, message, offset, expected=()):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = tuple(expected)


class NonIntegerExponent(PolySyntaxError):
    pass


class VariableOutOfRange(PolySyntaxError):
    pass
