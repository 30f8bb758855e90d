"""Exception types raised across the package."""


class QZetaError(Exception):
    """Base class for all package errors."""


class NonExpandable(QZetaError):
    """A fraction cannot be expanded as a power series in Z."""


class OrderMismatch(QZetaError):
    """Truncated series with different variables or orders were combined."""


class NonInvertibleLeadingTerm(QZetaError):
    """A truncated series has a constant term that is not a unit."""


class NotDivisible(QZetaError):
    """An exact polynomial division left a remainder."""


class NotRepresentable(QZetaError):
    """A quotient has no denominator made of (1 - q^a Z^b) factors."""


class DegenerateParameters(QZetaError):
    """A denominator factor vanishes identically for the chosen parameters."""


class ZeroAlpha(QZetaError):
    """The scaling of an affine shift is zero."""


class SingularHankel(QZetaError):
    """A Hankel determinant vanishes, so the moment sequence has no J-fraction."""

    def __init__(self, k, message=None):
        self.k = k
        super().__init__(message or f"phi(p_{k}^2) vanishes at k = {k}")


class BudgetExceeded(QZetaError):
    """An enumeration would visit more elements than the configured budget."""
