"""Exception hierarchy shared by the library and the command line."""

# Exit codes used by the command line
EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_INVALID = 2
EXIT_SIZE = 3
EXIT_UNSOLVABLE = 4
EXIT_VERIFICATION = 5


class MoserPolyError(Exception):
    """Base exception for moserpoly errors."""
    pass


class InvalidArgumentError(MoserPolyError, ValueError):
    """A precondition of an operation was violated."""
    pass


class MultisetSizeError(InvalidArgumentError):
    """An s-sum was requested with s larger than the multiset."""
    pass


class EnumerationLimitError(MoserPolyError):
    """A brute-force enumeration would exceed its hard cap."""
    pass


class IntegralityError(MoserPolyError, ArithmeticError):
    """A division that must be exact left a remainder."""
    pass


class RootFindingError(MoserPolyError):
    """Numeric root iteration did not converge.

    The best iterate is kept on ``approximation`` so callers can inspect it.
    """

    def __init__(self, message, approximation=None):
        super().__init__(message)
        self.approximation = approximation


class RecoveryError(MoserPolyError):
    """Base for failures while recovering a multiset from its s-sums."""
    pass


class UnsolvableError(RecoveryError):
    """Some Moser polynomial value F_{s,k}(n) vanishes for the requested pair."""

    def __init__(self, report):
        super().__init__(
            f"(n={report.n}, s={report.s}) is not covered by the recovery "
            f"criterion: F_{{s,k}}(n) vanishes for k in {list(report.vanishing_k)}"
        )
        self.report = report


class IrrationalRootsError(RecoveryError):
    """Exact mode could not split the recovered polynomial over the rationals."""
    pass


class VerificationError(RecoveryError):
    """Recomputed s-sums of the recovered multiset do not match the input."""
    pass
