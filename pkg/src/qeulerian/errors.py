"""Exceptions raised by qeulerian.

Everything derives from ``QEulerianError``, itself a ``ValueError``, so callers that only
care about bad input can keep catching ``ValueError``.
"""


class QEulerianError(ValueError):
    """Base class for all library errors."""


class DivisionNotExact(QEulerianError):
    """Polynomial division left a nonzero remainder."""


class PolyDivisionByZero(QEulerianError, ZeroDivisionError):
    """Division by the zero polynomial."""


class MixedOrientation(QEulerianError):
    """A bivariate polynomial was built from something other than q-polynomials."""


class PartsSumMismatch(QEulerianError):
    """Multinomial parts do not add up to n."""


class MTooSmall(QEulerianError):
    """Hook weight block requested for fewer than two letters."""


class NotDivisor(QEulerianError):
    """Root order d does not divide n."""


class ExcUndefined(QEulerianError):
    """Excedances requested on a word whose letters are not exactly 1..n."""


class NotAHook(QEulerianError):
    """A hook was required but the word is increasing."""


class NotAQuasiHook(QEulerianError):
    """Word is not one letter followed by an increasing run of the others."""


class InvalidWord(QEulerianError):
    """Malformed word or combinatorial object."""


class LecOutOfRange(QEulerianError):
    """lec value outside the domain of a lec-complementing bijection."""


class IndexExcluded(QEulerianError):
    """Identity index at an excluded value."""
