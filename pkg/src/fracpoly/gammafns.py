"""Gamma, beta and the combinatorial primitives built on top of them.

The gamma function is a Spouge approximation whose parameter is derived
from the requested precision, so the error bound 2^(8-precision) is a
consequence of the construction rather than a hope.  Arguments are shifted
into [1, 2) by the functional equation first: the alternating Spouge sum
cancels more and more bits as the argument grows, and the shift pins that
loss at roughly 0.17*precision bits, which the guard bits absorb.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp

from .errors import DomainError, PoleError
from .scalars import (
    DEFAULT_PRECISION,
    Scalar,
    ScalarLike,
    as_scalar,
    check_precision,
    working_precision,
)

__all__ = [
    "GammaValue",
    "gamma",
    "gamma_value",
    "reciprocal_gamma",
    "beta",
    "binomial",
    "generalized_binomial",
    "multinomial",
    "factorial",
]


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return math.factorial(n)


def _spouge_a(precision: int) -> int:
    # error ~ a^(-1/2) (2*pi)^(-(a+1/2)); each unit of a buys log2(2*pi) bits
    return int(math.ceil((precision + 16) / 2.6515)) + 2


def _spouge_wp(precision: int) -> int:
    return precision + 48 + precision // 5


@lru_cache(maxsize=32)
def _spouge_coeffs(a: int, wp: int):
    with working_precision(wp):
        coeffs = [mp.sqrt(2 * mp.pi)]
        for k in range(1, a):
            t = mp.power(a - k, k - mp.mpf(1) / 2) * mp.e ** (a - k) / math.factorial(k - 1)
            coeffs.append(t if k % 2 == 1 else -t)
        return tuple(coeffs)


def _gamma_positive(x, precision: int):
    """Gamma of an mpf x > 0 at the current (elevated) working precision."""
    num = mp.mpf(1)
    den = mp.mpf(1)
    while x >= 2:
        x -= 1
        num *= x
    while x < 1:
        den *= x
        x += 1
    a = _spouge_a(precision)
    coeffs = _spouge_coeffs(a, _spouge_wp(precision))
    z = x - 1
    s = coeffs[0]
    for k in range(1, a):
        s += coeffs[k] / (z + k)
    g = mp.power(z + a, z + mp.mpf(1) / 2) * mp.exp(-(z + a)) * s
    return g * num / den


def _integer_pole(x: Scalar) -> int | None:
    """The non-positive integer x equals, if any."""
    if x.is_integer():
        n = int(x)
        if n <= 0:
            return n
    return None


def gamma(x: ScalarLike, precision: int = DEFAULT_PRECISION) -> Scalar:
    """Gamma function of a real argument, accurate to 2^(8-precision) relative.

    Positive integers take the exact factorial path, so gamma(n) is (n-1)!
    correctly rounded at the working precision.  Negative non-integers go
    through the reflection formula.

    Raises PoleError at 0, -1, -2, ...
    """
    check_precision(precision)
    xs = as_scalar(x)
    if _integer_pole(xs) is not None:
        raise PoleError(f"gamma pole at {xs}")
    if xs.is_integer():
        n = int(xs)
        with working_precision(precision):
            return Scalar.big(mp.mpf(math.factorial(n - 1)), precision)
    wp = _spouge_wp(precision)
    with working_precision(wp):
        xm = xs.as_mpf(wp)
        if xm > 0:
            v = _gamma_positive(xm, precision)
        else:
            v = mp.pi / (mp.sinpi(xm) * _gamma_positive(1 - xm, precision))
    return Scalar.big(v, precision)


@dataclass(frozen=True)
class GammaValue:
    """A gamma evaluation together with its argument and precision.

    For positive integer arguments the value is (n-1)! correctly rounded
    at the working precision.
    """

    argument: Scalar
    value: Scalar
    precision: int


def gamma_value(x: ScalarLike, precision: int = DEFAULT_PRECISION) -> GammaValue:
    xs = as_scalar(x)
    return GammaValue(xs, gamma(xs, precision), precision)


def reciprocal_gamma(x: ScalarLike, precision: int = DEFAULT_PRECISION) -> Scalar:
    """1/gamma as an entire function: exactly 0 at non-positive integers."""
    check_precision(precision)
    xs = as_scalar(x)
    if _integer_pole(xs) is not None:
        return Scalar.big(0, precision)
    if xs.is_integer():
        n = int(xs)
        with working_precision(precision + 16):
            v = 1 / mp.mpf(math.factorial(n - 1))
        return Scalar.big(v, precision)
    wp = _spouge_wp(precision)
    with working_precision(wp):
        xm = xs.as_mpf(wp)
        if xm > mp.mpf(1) / 2:
            v = 1 / _gamma_positive(xm, precision)
        else:
            # sin(pi x) * gamma(1-x) / pi is entire, hence smooth across poles
            v = mp.sinpi(xm) * _gamma_positive(1 - xm, precision) / mp.pi
    return Scalar.big(v, precision)


def beta(x: ScalarLike, y: ScalarLike, precision: int = DEFAULT_PRECISION) -> Scalar:
    """Beta(x, y) = gamma(x) gamma(y) / gamma(x+y) for x, y > 0."""
    check_precision(precision)
    xs, ys = as_scalar(x), as_scalar(y)
    if xs <= 0 or ys <= 0:
        raise DomainError(f"beta requires positive arguments, got ({xs}, {ys})")
    inner = precision + 24
    gx = gamma(xs, inner)
    gy = gamma(ys, inner)
    gxy = gamma(xs + ys, inner)
    with working_precision(inner):
        v = gx.value * gy.value / gxy.value
    return Scalar.big(v, precision)


def binomial(n: int, k: int) -> Scalar:
    """Exact integer binomial coefficient; 0 when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial expects nonnegative integers, got ({n}, {k})")
    if k > n:
        return Scalar.exact(0)
    return Scalar.exact(math.comb(n, k))


def generalized_binomial(alpha: ScalarLike, k: int, precision: int = DEFAULT_PRECISION) -> Scalar:
    """binom(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k! for real upper index.

    Exact when alpha is rational, a big float otherwise.
    """
    if k < 0:
        raise DomainError(f"lower index must be nonnegative, got {k}")
    a = as_scalar(alpha)
    if a.is_exact:
        prod = Fraction(1)
        av = a.value
        for i in range(k):
            prod *= av - i
        return Scalar.exact(prod / math.factorial(k))
    check_precision(precision)
    with working_precision(a.precision):
        prod = mp.mpf(1)
        av = a.value
        for i in range(k):
            prod *= av - i
        return Scalar.big(prod / math.factorial(k), a.precision)


def multinomial(parts) -> Scalar:
    """(sum parts)! / prod(parts_i!), exact."""
    parts = list(parts)
    if any((not isinstance(p, int)) or p < 0 for p in parts):
        raise DomainError(f"multinomial expects nonnegative integers, got {parts}")
    total = math.factorial(sum(parts))
    for p in parts:
        total //= math.factorial(p)
    return Scalar.exact(total)
