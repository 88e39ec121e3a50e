"""Exception types raised across the package."""


class QMarkovError(ValueError):
    """Base class for all errors raised by qmarkov."""


class NonDivisibleError(QMarkovError):
    """No exact Laurent quotient exists."""


class EmptySupportError(QMarkovError):
    """Degree-type query on the zero polynomial."""


class NotNeighborsError(QMarkovError):
    """Mediant requested for two fractions that are not Farey neighbors."""


class MalformedInputError(QMarkovError):
    pass


class UnsupportedLabelError(QMarkovError):
    pass


class OracleBoundExceededError(QMarkovError):
    pass
