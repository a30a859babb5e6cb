"""Exception types shared across the library."""


class HallcanonError(Exception):
    """Base class for all library-specific errors."""


class NotDivisible(HallcanonError):
    """Exact Laurent-polynomial division has a nonzero remainder."""


class PositiveDegree(HallcanonError):
    """A power series expansion at v = infinity has a positive-exponent term."""


class BudgetExceeded(HallcanonError):
    """An enumeration would exceed the configured resource budget."""


class InterpolationUnstable(HallcanonError):
    """Counting-polynomial interpolation failed its held-out validation."""


class UnsupportedFamily(HallcanonError):
    """The requested quiver family is not supported."""


class AmbiguousFingerprint(HallcanonError):
    """Two distinct isomorphism classes share a Hom fingerprint."""


class NonGenericEnd(HallcanonError):
    """dim End of a class varies with the prime; should not happen here."""


class NonCommutingEntries(HallcanonError):
    """Determinant entries that must commute do not."""


class BadDiagonal(HallcanonError):
    """A triangular system has a diagonal entry different from 1."""


class BadInvolution(HallcanonError):
    """A triangular system violates the bar-involution condition."""


class ConstantObstruction(HallcanonError):
    """The correction equation has a nonzero constant term."""


class MonomialSearchFailed(HallcanonError):
    """No verified unitriangular monomial word was found."""


class NotDynkin(HallcanonError):
    """The quiver is not of Dynkin (ADE) type."""


class CycleDetected(HallcanonError):
    """The Hom-nonvanishing relation unexpectedly contains a cycle."""
