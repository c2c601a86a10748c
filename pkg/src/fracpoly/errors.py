"""Exception types raised across the package."""

from __future__ import annotations


class FracPolyError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(FracPolyError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Gamma evaluated at a non-positive integer."""


class OrderMismatch(FracPolyError, ValueError):
    """Two truncated series of different truncation order were combined."""


class ZeroConstantTerm(FracPolyError, ZeroDivisionError):
    """Reciprocal of a series whose constant term vanishes."""


class ZeroSeries(FracPolyError, ZeroDivisionError):
    """Division by a series that vanishes through its whole truncation order."""


class ValuationError(FracPolyError, ValueError):
    """A series division cannot cancel the denominator's leading power."""


class IndexOutOfOrder(FracPolyError, IndexError):
    """Coefficient index beyond the truncation order."""


class DegenerateDenominator(FracPolyError, ZeroDivisionError):
    """A family generating-function denominator vanishes identically."""


class ConvergenceEnvelopeExceeded(FracPolyError, ValueError):
    """Evaluation point outside the documented series-summation envelope."""


class ToleranceUnreachable(FracPolyError, ArithmeticError):
    """The requested tolerance cannot be met at the working precision."""


class DegreeTooLow(FracPolyError, ValueError):
    """Closed-form fractional derivative requested for degree < ceil(order)."""


class CompositionMismatch(FracPolyError):
    """The integral/derivative composition disagrees with the direct operator.

    Carries both expansions so callers can inspect where they differ.  This
    is the expected outcome when the composed route is applied to inputs
    (constants, low-degree terms) on which the two operator definitions
    genuinely disagree.
    """

    def __init__(self, message, composed, direct, offenders):
        super().__init__(message)
        self.composed = composed
        self.direct = direct
        self.offenders = offenders
