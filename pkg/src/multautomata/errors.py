"""Exception hierarchy shared by every module."""


class MultAutomataError(Exception):
    """Base class for domain errors raised by this package."""


class InvalidWordError(MultAutomataError, ValueError):
    """A word uses a letter outside the alphabet."""


class MismatchError(MultAutomataError, ValueError):
    """Operands live over different semirings or alphabets."""


class NotProperError(MultAutomataError, ValueError):
    """Star requested on a series with a nonzero constant term."""


class CapabilityError(MultAutomataError, TypeError):
    """The semiring lacks a capability (subtraction, inverses) the operation needs."""


class UnsupportedRelatorError(MultAutomataError, ValueError):
    """A relator is neither length-preserving nor a letter erasure."""


class PreconditionError(MultAutomataError, ValueError):
    """A documented precondition of an operation does not hold."""
