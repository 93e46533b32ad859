"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so the grouping matters:
invalid input (2), unsupported size (3), internal inconsistency (4).
"""


class WeilresError(Exception):
    """Base class for all library errors."""


class InvalidInput(WeilresError, ValueError):
    pass


class InvalidWeilNumber(InvalidInput):
    pass


class SingularCurve(InvalidInput):
    pass


class NotIrreducible(InvalidInput):
    pass


class NotFundamental(InvalidInput):
    pass


class ActionMismatch(InvalidInput):
    pass


class NotIdempotentSystem(InvalidInput):
    pass


class UnsupportedSize(WeilresError):
    pass


class UnsupportedDegree(UnsupportedSize):
    pass


class ConsistencyError(WeilresError, AssertionError):
    """A cross-check between two independent computations failed."""


class MultiplicityNotIntegral(ConsistencyError):
    pass
