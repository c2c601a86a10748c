"""Bernoulli-, Euler- and Genocchi-type polynomial families.

The three families share the construction: divide a small numerator by
lambda * E_alpha(z) -+ 1, read off exponential coefficients, and spread
them over powers of x with binomial weights.  alpha = 1 specializes the
generating functions to the lambda-weighted (Apostol) families and
alpha = lambda = 1 to the classical ones.  Higher order h >= 2 is defined
for the Bernoulli kind at alpha = 1 only, as the h-fold product of the
order-1 series.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable

from .errors import DegenerateDenominator, DomainError, ValuationError, ZeroConstantTerm, ZeroSeries
from .gammafns import binomial, multinomial
from .mittag import MLParams, ml_series
from .scalars import DEFAULT_PRECISION, Scalar, ScalarLike, as_scalar, check_precision
from .series import (
    TruncatedSeries,
    cauchy_product,
    divide_with_valuation,
    egf_coefficient,
    multiply_exp,
)

__all__ = [
    "FamilyKind",
    "FamilyParams",
    "Polynomial",
    "family_numbers",
    "family_series",
    "family_polynomial",
    "eval_polynomial",
    "poly_derivative",
    "integral_over_unit_interval",
    "higher_order_numbers",
    "multinomial_number_product",
]


class FamilyKind(str, Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    GENOCCHI = "genocchi"


@dataclass(frozen=True)
class FamilyParams:
    """Selects one generating function: kind, alpha > 0, lambda > 0, order h."""

    kind: FamilyKind
    alpha: Scalar
    lam: Scalar
    h: int = 1

    def __init__(self, kind, alpha: ScalarLike = 1, lam: ScalarLike = 1, h: int = 1):
        kind = FamilyKind(kind)
        a, l = as_scalar(alpha), as_scalar(lam)
        if a <= 0:
            raise DomainError(f"family parameter alpha must be positive, got {a}")
        if l <= 0:
            raise DomainError(f"family parameter lambda must be positive, got {l}")
        if not isinstance(h, int) or h < 1:
            raise DomainError(f"order h must be a positive integer, got {h!r}")
        if h >= 2 and (kind is not FamilyKind.BERNOULLI or a != 1):
            raise DomainError(
                "order h >= 2 is defined only for the Bernoulli kind at alpha = 1"
            )
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "lam", l)
        object.__setattr__(self, "h", h)

    def cache_key(self):
        return (self.kind.value, self.alpha.cache_key(), self.lam.cache_key(), self.h)


class Polynomial:
    """Dense polynomial in one variable, coefficients ascending by degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike]):
        cs = [as_scalar(c) for c in coeffs]
        if not cs:
            cs = [as_scalar(0)]
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Index of the last stored coefficient (trailing zeros tolerated)."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._coeffs)

    def evaluate(self, x: ScalarLike) -> Scalar:
        xs = as_scalar(x)
        acc = as_scalar(0)
        for c in reversed(self._coeffs):
            acc = acc * xs + c
        return acc

    def derivative(self) -> "Polynomial":
        if len(self._coeffs) == 1:
            return Polynomial([0])
        return Polynomial([c * k for k, c in enumerate(self._coeffs) if k >= 1])

    def antiderivative(self) -> "Polynomial":
        out = [as_scalar(0)]
        for k, c in enumerate(self._coeffs):
            out.append(c / (k + 1))
        return Polynomial(out)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self._coeffs), len(other._coeffs))
        out = []
        for k in range(n):
            a = self._coeffs[k] if k < len(self._coeffs) else as_scalar(0)
            b = other._coeffs[k] if k < len(other._coeffs) else as_scalar(0)
            out.append(a + b)
        return Polynomial(out)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out = [as_scalar(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] = out[i + j] + a * b
            return Polynomial(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor: ScalarLike) -> "Polynomial":
        f = as_scalar(factor)
        return Polynomial([f * c for c in self._coeffs])

    def monomials(self):
        """Yield (coefficient, power) pairs for nonzero coefficients."""
        for k, c in enumerate(self._coeffs):
            if not c.is_zero():
                yield c, k

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        za = list(self._coeffs) + [as_scalar(0)] * (n - len(self._coeffs))
        zb = list(other._coeffs) + [as_scalar(0)] * (n - len(other._coeffs))
        return all(a == b for a, b in zip(za, zb))

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self._coeffs]})"


def _number_series(p: FamilyParams, order: int, precision: int) -> TruncatedSeries:
    """Ordinary-coefficient series of the number generating function."""
    if p.kind is FamilyKind.BERNOULLI:
        den_const_shift = -1
    else:
        den_const_shift = 1
    # the z coefficient of lambda*E_alpha -+ 1 is lambda/gamma(alpha+1) != 0,
    # so the denominator valuation is 1 exactly when the constant term dies
    v = 1 if (p.kind is FamilyKind.BERNOULLI and p.lam == 1) else 0
    m = order + v
    e_alpha = ml_series(MLParams(p.alpha, 1), m, precision)
    den_coeffs = [c * p.lam for c in e_alpha.coeffs]
    den = TruncatedSeries(den_coeffs)
    den = TruncatedSeries([den.coeff(0) + den_const_shift] + list(den.coeffs[1:]))
    if p.kind is FamilyKind.BERNOULLI:
        num = TruncatedSeries.monomial(1, 1, m)
    elif p.kind is FamilyKind.EULER:
        num = TruncatedSeries.constant(2, m)
    else:
        num = TruncatedSeries.monomial(2, 1, m)
    try:
        return divide_with_valuation(num, den)
    except (ZeroSeries, ZeroConstantTerm) as exc:
        raise DegenerateDenominator(
            f"generating denominator vanishes through order {m} for {p}"
        ) from exc


@lru_cache(maxsize=256)
def _family_series_cached(key, p: FamilyParams, order: int, precision: int) -> TruncatedSeries:
    del key
    if p.h == 1:
        return _number_series(p, order, precision)
    base = _number_series(FamilyParams(p.kind, p.alpha, p.lam), order, precision)
    out = base
    for _ in range(p.h - 1):
        out = cauchy_product(out, base)
    return out


def family_series(p: FamilyParams, order: int, precision: int = DEFAULT_PRECISION) -> TruncatedSeries:
    """Number generating series in ordinary coefficients, through ``order``."""
    check_precision(precision)
    if order < 0:
        raise DomainError(f"order must be nonnegative, got {order}")
    return _family_series_cached((p.cache_key(), order, precision), p, order, precision)


def family_numbers(p: FamilyParams, max_index: int, precision: int = DEFAULT_PRECISION) -> tuple[Scalar, ...]:
    """EGF coefficients of the number generating function, indices 0..max_index."""
    s = family_series(p, max_index, precision)
    return tuple(egf_coefficient(s, k) for k in range(max_index + 1))


def family_polynomial(p: FamilyParams, n: int, precision: int = DEFAULT_PRECISION) -> Polynomial:
    """Degree-n family polynomial: coefficient of x^{n-k} is binom(n,k) times number k."""
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    nums = family_numbers(p, n, precision)
    coeffs = [as_scalar(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = binomial(n, k) * nums[k]
    return Polynomial(coeffs)


def eval_polynomial(q: Polynomial, x: ScalarLike) -> Scalar:
    """Horner evaluation; exact in the rational domain."""
    return q.evaluate(x)


def poly_derivative(q: Polynomial) -> Polynomial:
    """Formal d/dx."""
    return q.derivative()


def integral_over_unit_interval(
    p: FamilyParams, n: int, x: ScalarLike, precision: int = DEFAULT_PRECISION
) -> Scalar:
    """integral over [x, x+1] of the degree-n family polynomial.

    Computed from the exact antiderivative; equals
    (P_{n+1}(x+1) - P_{n+1}(x)) / (n+1).
    """
    xs = as_scalar(x)
    anti = family_polynomial(p, n, precision).antiderivative()
    return anti.evaluate(xs + 1) - anti.evaluate(xs)


def higher_order_numbers(
    lam: ScalarLike, h: int, max_index: int, precision: int = DEFAULT_PRECISION
) -> tuple[Scalar, ...]:
    """EGF coefficients of (z/(lambda e^z - 1))^h: the h-fold convolution.

    At lambda = 1 the un-divided form carries a z^h valuation, so a
    truncation order below h is rejected.
    """
    p = FamilyParams(FamilyKind.BERNOULLI, 1, lam, h)
    if p.lam == 1 and max_index < h:
        raise ValuationError(
            f"truncation order {max_index} cannot cancel the z^{h} valuation at lambda = 1"
        )
    return family_numbers(p, max_index, precision)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def multinomial_number_product(
    lam: ScalarLike, h: int, r: int, precision: int = DEFAULT_PRECISION
) -> Scalar:
    """Sum over compositions of r into h parts of multinomial(s) * prod B_{s_j}(lambda).

    Termwise equal to higher_order_numbers(lambda, h)[r].
    """
    if not isinstance(h, int) or h < 1:
        raise DomainError(f"h must be a positive integer, got {h!r}")
    if r < 0:
        raise DomainError(f"index must be nonnegative, got {r}")
    nums = family_numbers(FamilyParams(FamilyKind.BERNOULLI, 1, lam), r, precision)
    total = as_scalar(0)
    for parts in _compositions(r, h):
        prod = multinomial(parts)
        for s in parts:
            prod = prod * nums[s]
        total = total + prod
    return total
