"""Exception types shared across the package."""


class FtlocusError(Exception):
    """Base class for errors raised by this package."""


class ZeroVectorError(FtlocusError, ValueError):
    """A direction or norm argument was the zero vector."""


class NotSymmetricError(FtlocusError, ValueError):
    """Candidate unit ball is not centrally symmetric about the origin."""


class OriginNotInteriorError(FtlocusError, ValueError):
    """Candidate unit ball does not contain the origin in its interior."""


class DuplicateSitesError(FtlocusError, ValueError):
    """Site list contains a repeated point."""


class CoincidentPointsError(FtlocusError, ValueError):
    """Two points that must be distinct coincide."""


class ModeMismatchError(FtlocusError, ValueError):
    """Certificate mode does not match the query point / site relation."""


class OddCardinalityError(FtlocusError, ValueError):
    """Operation needs an even number of points."""


class ZeroArmError(ZeroVectorError):
    """An angle was given with an arm equal to its vertex."""


class DegenerateConfigError(FtlocusError, ValueError):
    """Degree-three configuration has coincident arm directions."""


class PreconditionViolatedError(FtlocusError, ValueError):
    """A stated precondition failed; `clause` names which one."""

    def __init__(self, clause: str, message: str = ""):
        self.clause = clause
        super().__init__(message or clause)


class MaxIterationsExceededError(FtlocusError, RuntimeError):
    """Iterative float solver ran out of its iteration budget."""


class UnknownSuiteError(FtlocusError, ValueError):
    """Requested randomized suite name is not registered."""


class OperationCancelled(FtlocusError, RuntimeError):
    """A cooperative cancellation token was triggered mid-solve."""


class CancelToken:
    """Cooperative cancellation: long loops call check() at safe points."""

    def __init__(self):
        self.cancelled = False

    def cancel(self):
        self.cancelled = True

    def check(self):
        if self.cancelled:
            raise OperationCancelled("cancelled")
