"""Truncated power series with exponential-generating-function extraction.

Coefficients are stored in the ordinary convention (a_k multiplying z^k),
so the Cauchy product is a plain convolution; the factorial enters only in
:func:`egf_coefficient`.  All coefficients of a series share one domain:
all exact, or all floats at a single precision (mixed input is promoted).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import (
    IndexOutOfOrder,
    OrderMismatch,
    ValuationError,
    ZeroConstantTerm,
    ZeroSeries,
)
from .scalars import Scalar, ScalarLike, as_scalar

__all__ = [
    "TruncatedSeries",
    "series_add",
    "cauchy_product",
    "reciprocal",
    "divide_with_valuation",
    "multiply_exp",
    "egf_coefficient",
    "valuation",
    "exp_series",
]


def _unify(coeffs: Sequence[Scalar]) -> tuple[Scalar, ...]:
    precs = [c.precision for c in coeffs if not c.is_exact]
    if not precs:
        return tuple(coeffs)
    prec = max(precs)
    return tuple(Scalar.big(c.as_mpf(prec), prec) for c in coeffs)


class TruncatedSeries:
    """A formal power series known through z^N."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike]):
        cs = [as_scalar(c) for c in coeffs]
        if not cs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        self._coeffs = _unify(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._coeffs

    def coeff(self, k: int) -> Scalar:
        if k < 0 or k > self.order:
            raise IndexOutOfOrder(f"coefficient {k} of a series truncated at order {self.order}")
        return self._coeffs[k]

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def constant(cls, value: ScalarLike, order: int) -> "TruncatedSeries":
        return cls([value] + [0] * order)

    @classmethod
    def monomial(cls, value: ScalarLike, power: int, order: int) -> "TruncatedSeries":
        if power > order:
            return cls.zero(order)
        coeffs = [0] * (order + 1)
        coeffs[power] = value
        return cls(coeffs)

    def scale(self, factor: ScalarLike) -> "TruncatedSeries":
        f = as_scalar(factor)
        return TruncatedSeries([f * c for c in self._coeffs])

    def shift_down(self, v: int) -> "TruncatedSeries":
        """Divide by z^v; the first v coefficients must vanish."""
        if any(not c.is_zero() for c in self._coeffs[:v]):
            raise ValuationError(f"series has valuation < {v}, cannot divide by z^{v}")
        if v > self.order:
            raise ValuationError(f"cannot shift a series of order {self.order} down by {v}")
        return TruncatedSeries(self._coeffs[v:])

    def __add__(self, other):
        return series_add(self, other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return cauchy_product(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __sub__(self, other):
        return series_add(self, other.scale(-1))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries([{shown}{tail}], order={self.order})"


def _check_same_order(a: TruncatedSeries, b: TruncatedSeries):
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same_order(a, b)
    return TruncatedSeries([x + y for x, y in zip(a.coeffs, b.coeffs)])


def cauchy_product(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """c_n = sum_{k<=n} a_k b_{n-k}, truncated at the common order."""
    _check_same_order(a, b)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(a.order + 1):
        s = as_scalar(0)
        for k in range(n + 1):
            s = s + ac[k] * bc[n - k]
        out.append(s)
    return TruncatedSeries(out)


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse through the truncation order (triangular recurrence)."""
    a0 = a.coeff(0)
    if a0.is_zero():
        raise ZeroConstantTerm("cannot invert a series with zero constant term")
    inv0 = as_scalar(1) / a0
    out = [inv0]
    for n in range(1, a.order + 1):
        s = as_scalar(0)
        for k in range(1, n + 1):
            s = s + a.coeff(k) * out[n - k]
        out.append(-inv0 * s)
    return TruncatedSeries(out)


def valuation(a: TruncatedSeries) -> int | None:
    """Index of the first nonzero coefficient; None if all vanish."""
    for k, c in enumerate(a.coeffs):
        if not c.is_zero():
            return k
    return None


def divide_with_valuation(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """num/den where den may start with a power of z.

    The common power z^v (v the denominator valuation) is cancelled first,
    so every returned coefficient is correct; the result is truncated at
    order N - v.
    """
    _check_same_order(num, den)
    v = valuation(den)
    if v is None:
        raise ZeroSeries("denominator vanishes through the truncation order")
    vn = valuation(num)
    if vn is not None and vn < v:
        raise ValuationError(
            f"numerator valuation {vn} below denominator valuation {v}; "
            "the quotient is not a power series"
        )
    if vn is None and v > 0:
        # zero numerator: quotient is zero at the reduced order
        return TruncatedSeries.zero(num.order - v)
    return cauchy_product(num.shift_down(v), reciprocal(den.shift_down(v)))


def exp_series(x: ScalarLike, order: int) -> TruncatedSeries:
    """The series of e^{x z} through the given order."""
    xs = as_scalar(x)
    coeffs = [as_scalar(1)]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * xs / k)
    return TruncatedSeries(coeffs)


def multiply_exp(a: TruncatedSeries, x: ScalarLike) -> TruncatedSeries:
    """a(z) * e^{x z} truncated at the order of a."""
    return cauchy_product(a, exp_series(x, a.order))


def egf_coefficient(a: TruncatedSeries, n: int) -> Scalar:
    """n! times the ordinary coefficient: the value attached to z^n/n!."""
    if n < 0 or n > a.order:
        raise IndexOutOfOrder(f"EGF coefficient {n} of a series truncated at order {a.order}")
    return a.coeff(n) * math.factorial(n)
