"""Mittag-Leffler series construction and point evaluation.

E_{a,b}(z) = sum z^n / gamma(a n + b) with a, b > 0.  Coefficients are
exact rationals exactly when a and b are positive integers (the gamma
arguments are then positive integers themselves); otherwise they live in
the float domain at the requested precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .errors import ConvergenceEnvelopeExceeded, DomainError, ToleranceUnreachable
from .gammafns import _gamma_positive, _spouge_wp
from .scalars import DEFAULT_PRECISION, Scalar, ScalarLike, as_scalar, check_precision, working_precision
from .series import TruncatedSeries

__all__ = ["MLParams", "ml_series", "ml_eval", "ml_one_m_closed", "EVAL_ENVELOPE"]

# |z| beyond which the plain Taylor sum is not offered (cancellation grows
# linearly in |z| for negative arguments; see README caveats)
EVAL_ENVELOPE = 50

_MAX_TERMS = 100_000


@dataclass(frozen=True)
class MLParams:
    """Parameters (alpha, beta) of the two-parameter Mittag-Leffler function."""

    alpha: Scalar
    beta: Scalar

    def __init__(self, alpha: ScalarLike, beta: ScalarLike = 1):
        a, b = as_scalar(alpha), as_scalar(beta)
        if a <= 0 or b <= 0:
            raise DomainError(f"Mittag-Leffler parameters must be positive, got ({a}, {b})")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def is_integer_pair(self) -> bool:
        return self.alpha.is_exact and self.beta.is_exact \
            and self.alpha.is_integer() and self.beta.is_integer()


def ml_series(p: MLParams, order: int, precision: int = DEFAULT_PRECISION) -> TruncatedSeries:
    """Taylor coefficients 1/gamma(alpha n + beta) through the given order."""
    check_precision(precision)
    if order < 0:
        raise DomainError(f"series order must be nonnegative, got {order}")
    if p.is_integer_pair:
        a, b = int(p.alpha), int(p.beta)
        return TruncatedSeries(
            [Fraction(1, math.factorial(a * n + b - 1)) for n in range(order + 1)]
        )
    coeffs = []
    wp = _spouge_wp(precision)
    with working_precision(wp):
        am = p.alpha.as_mpf(wp)
        bm = p.beta.as_mpf(wp)
        for n in range(order + 1):
            # integer arguments must hit the exact factorial path so that
            # degenerate denominators (lambda = 1) cancel exactly
            coeffs.append(Scalar.big(_term_gamma_inv(am * n + bm, precision), precision))
    return TruncatedSeries(coeffs)


def _term_gamma_inv(arg, precision):
    """1/gamma(arg) for arg > 0 at the current working precision."""
    if arg == mp.floor(arg):
        return 1 / mp.mpf(math.factorial(int(arg) - 1))
    return 1 / _gamma_positive(arg, precision)


def ml_eval(
    p: MLParams,
    z: ScalarLike,
    tol: ScalarLike | None = None,
    precision: int = DEFAULT_PRECISION,
) -> Scalar:
    """Sum the defining series until the geometric tail bound is below tol.

    Raises ConvergenceEnvelopeExceeded for |z| > 50 and ToleranceUnreachable
    when the requested relative tolerance cannot be met at this precision
    (either statically, or because cancellation ate too many bits).
    """
    check_precision(precision)
    zs = as_scalar(z)
    if abs(zs.as_fraction()) > EVAL_ENVELOPE:
        raise ConvergenceEnvelopeExceeded(
            f"|z| = {abs(zs.as_fraction())} exceeds the evaluation envelope {EVAL_ENVELOPE}"
        )
    if tol is None:
        tol_fr = Fraction(1, 2 ** (precision - 24))
    else:
        tol_fr = as_scalar(tol).as_fraction()
        if tol_fr <= 0:
            raise DomainError(f"tolerance must be positive, got {tol_fr}")
    if tol_fr < Fraction(1, 2 ** (precision - 12)):
        raise ToleranceUnreachable(
            f"tolerance {float(tol_fr):.3e} below the resolution of {precision}-bit arithmetic"
        )
    wp = precision + 16
    with working_precision(wp):
        zm = zs.as_mpf(wp)
        am = p.alpha.as_mpf(wp)
        bm = p.beta.as_mpf(wp)
        tolm = mp.mpf(tol_fr.numerator) / tol_fr.denominator
        total = mp.mpf(0)
        peak = mp.mpf(0)
        term = _term_gamma_inv(bm, precision)  # n = 0, z^0
        zpow = mp.mpf(1)
        n = 0
        while True:
            total += term
            peak = max(peak, abs(term))
            zpow *= zm
            nxt = zpow * _term_gamma_inv(am * (n + 1) + bm, precision)
            if abs(nxt) < tolm * abs(total) and abs(term) > 0:
                ratio = abs(nxt) / abs(term)
                if ratio < mp.mpf(1) / 2:
                    tail = abs(nxt) / (1 - ratio)
                    if tail < tolm * abs(total):
                        total += nxt
                        break
            term = nxt
            n += 1
            if n > _MAX_TERMS:
                raise ToleranceUnreachable(
                    f"series did not settle within {_MAX_TERMS} terms "
                    f"(alpha={p.alpha}, z={zs})"
                )
        # bits destroyed by cancellation must leave room for the tolerance
        if total == 0 or peak / abs(total) > mp.mpf(2) ** (precision - 8) * tolm:
            raise ToleranceUnreachable(
                f"cancellation in the alternating sum exceeds the {precision}-bit budget "
                f"for tolerance {float(tolm):.3e}"
            )
    return Scalar.big(total, precision)


def ml_one_m_closed(m: int, z: ScalarLike, precision: int = DEFAULT_PRECISION) -> Scalar:
    """Closed form of E_{1,m}: (e^z - sum_{k<=m-2} z^k/k!) / z^{m-1}.

    Near z = 0 the subtraction cancels catastrophically, so |z| < 1/4 falls
    back to the series evaluation.
    """
    check_precision(precision)
    if not isinstance(m, int) or m < 2:
        raise DomainError(f"closed form requires integer m >= 2, got {m!r}")
    zs = as_scalar(z)
    if abs(zs.as_fraction()) < Fraction(1, 4):
        return ml_eval(MLParams(1, m), zs, tol=Fraction(1, 2 ** (precision - 24)),
                       precision=precision)
    wp = precision + 8 * m + 16
    with working_precision(wp):
        zm = zs.as_mpf(wp)
        partial = mp.mpf(0)
        for k in range(m - 1):
            partial += zm ** k / math.factorial(k)
        v = (mp.exp(zm) - partial) / zm ** (m - 1)
    return Scalar.big(v, precision)
