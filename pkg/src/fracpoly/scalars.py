"""Coefficient domains: exact rationals and explicit-precision big floats.

Every quantity the package computes lives in a :class:`Scalar`, which is
either an exact ``fractions.Fraction`` (normalized, arbitrary size) or an
mpmath float tagged with the precision in bits it was computed at.
Arithmetic between two exact scalars stays exact; any operation touching a
float promotes to a float at the larger of the operand precisions.
"""

from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from fractions import Fraction
from typing import Union

from mpmath import mp

from .errors import DomainError

DEFAULT_PRECISION = 128
MIN_PRECISION = 64

# mpmath keeps its precision in a process-global context, so precision
# scopes are serialized; the lock is reentrant to allow nesting.
_PREC_LOCK = threading.RLock()


@contextmanager
def working_precision(bits: int):
    """Run a block with mpmath's context set to ``bits`` of precision."""
    with _PREC_LOCK:
        saved = mp.prec
        mp.prec = int(bits)
        try:
            yield mp
        finally:
            mp.prec = saved


def check_precision(bits: int) -> int:
    if not isinstance(bits, int) or bits < MIN_PRECISION:
        raise DomainError(f"precision must be an integer >= {MIN_PRECISION} bits, got {bits!r}")
    return bits


def mpf_to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpmath float."""
    sign, man, exp, _ = x._mpf_
    if man == 0:
        if x == 0:
            return Fraction(0)
        raise DomainError(f"cannot convert non-finite float {x!r} to a rational")
    num = -man if sign else man
    if exp >= 0:
        return Fraction(num << exp)
    return Fraction(num, 1 << -exp)


def fraction_to_mpf(q: Fraction, bits: int):
    """Fraction converted to an mpf, correctly rounded to ``bits``."""
    with working_precision(bits + 16):
        t = mp.mpf(q.numerator) / q.denominator
    with working_precision(bits):
        return +t


class Scalar:
    """A number in one of the two coefficient domains.

    Use :meth:`exact` / :meth:`big` to construct, or :func:`as_scalar` to
    coerce plain Python numbers.  Python floats coerce to their exact dyadic
    rational value; big floats only enter through explicit construction or
    through the transcendental functions.
    """

    __slots__ = ("_val", "_prec")

    def __init__(self, value, prec):
        self._val = value
        self._prec = prec

    @classmethod
    def exact(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value if value.is_exact else cls(value.as_fraction(), None)
        return cls(Fraction(value), None)

    @classmethod
    def big(cls, value, prec: int) -> "Scalar":
        check_precision(prec)
        if isinstance(value, Scalar):
            value = value._val
        if isinstance(value, Fraction):
            return cls(fraction_to_mpf(value, prec), prec)
        with working_precision(prec):
            return cls(+mp.mpf(value), prec)

    # -- inspection --------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self._prec is None

    @property
    def precision(self):
        """Working precision in bits, or None for the exact domain."""
        return self._prec

    @property
    def value(self):
        return self._val

    def is_integer(self) -> bool:
        if self.is_exact:
            return self._val.denominator == 1
        return self._val == mp.floor(self._val)

    def is_zero(self) -> bool:
        return self._val == 0

    def as_fraction(self) -> Fraction:
        return self._val if self.is_exact else mpf_to_fraction(self._val)

    def as_mpf(self, prec: int | None = None):
        bits = prec if prec is not None else (self._prec or DEFAULT_PRECISION)
        if self.is_exact:
            return fraction_to_mpf(self._val, bits)
        with working_precision(bits):
            return +self._val

    def cache_key(self):
        """Hashable key distinguishing domain, value and precision."""
        if self.is_exact:
            return ("Q", self._val)
        return ("F", self._prec, self._val._mpf_)

    # -- arithmetic --------------------------------------------------

    def _binary(self, other, op):
        other = as_scalar(other)
        if self.is_exact and other.is_exact:
            return Scalar(op(self._val, other._val), None)
        prec = max(self._prec or 0, other._prec or 0)
        with working_precision(prec):
            return Scalar(op(self.as_mpf(prec), other.as_mpf(prec)), prec)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return as_scalar(other)._binary(self, lambda a, b: a - b)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return as_scalar(other)._binary(self, lambda a, b: a / b)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("Scalar exponent must be an int")
        if self.is_exact:
            return Scalar(self._val ** n, None)
        with working_precision(self._prec):
            return Scalar(self._val ** n, self._prec)

    def __neg__(self):
        if self.is_exact:
            return Scalar(-self._val, None)
        with working_precision(self._prec):
            return Scalar(-self._val, self._prec)

    def __abs__(self):
        if self.is_exact:
            return Scalar(abs(self._val), None)
        with working_precision(self._prec):
            return Scalar(abs(self._val), self._prec)

    # -- comparisons (numeric, exact across domains) ------------------

    def _cmp_value(self):
        return self.as_fraction()

    def __eq__(self, other):
        try:
            other = as_scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._cmp_value() == other._cmp_value()

    def __lt__(self, other):
        return self._cmp_value() < as_scalar(other)._cmp_value()

    def __le__(self, other):
        return self._cmp_value() <= as_scalar(other)._cmp_value()

    def __gt__(self, other):
        return self._cmp_value() > as_scalar(other)._cmp_value()

    def __ge__(self, other):
        return self._cmp_value() >= as_scalar(other)._cmp_value()

    def __hash__(self):
        return hash(self._cmp_value())

    def __bool__(self):
        return self._val != 0

    # -- conversions / rendering --------------------------------------

    def __int__(self):
        if self.is_exact:
            if self._val.denominator != 1:
                raise ValueError(f"{self._val} is not an integer")
            return int(self._val)
        if not self.is_integer():
            raise ValueError(f"{self._val} is not an integer")
        return int(self._val)

    def __float__(self):
        return float(self._val)

    def __repr__(self):
        if self.is_exact:
            return f"Scalar({self._val!r})"
        return f"Scalar({self._val!r}, prec={self._prec})"

    def __str__(self):
        if self.is_exact:
            q = self._val
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        return decimal_str(self)


ScalarLike = Union[Scalar, int, Fraction, float, str]


def as_scalar(x: ScalarLike, precision: int | None = None) -> Scalar:
    """Coerce a Python number to a Scalar.

    ints, Fractions and decimal/ratio strings become exact rationals; a
    Python float becomes its exact dyadic value; mpmath floats become big
    floats at ``precision`` (default 128).
    """
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(Fraction(x), None)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise DomainError(f"non-finite value {x!r}")
        return Scalar(Fraction(x), None)
    if isinstance(x, str):
        return Scalar(Fraction(x), None)
    if isinstance(x, mp.mpf):
        return Scalar.big(x, precision or DEFAULT_PRECISION)
    raise TypeError(f"cannot interpret {type(x).__name__} as a Scalar")


def decimal_str(s: Scalar) -> str:
    """Shortest decimal string that round-trips at the scalar's precision."""
    if s.is_exact:
        raise TypeError("decimal_str is for the float domain; exact values print as p/q")
    prec = s.precision
    x = s.value
    if x == 0:
        return "0.0"
    max_digits = int(math.ceil(prec * math.log10(2))) + 2
    with working_precision(prec):
        for digits in range(1, max_digits + 1):
            cand = mp.nstr(x, digits, strip_zeros=True)
            if mp.mpf(cand) == x:
                return cand
        return mp.nstr(x, max_digits, strip_zeros=False)


def parse_decimal_str(text: str, precision: int) -> Scalar:
    """Inverse of :func:`decimal_str` at the same precision."""
    with working_precision(precision):
        return Scalar.big(mp.mpf(text), precision)


ZERO = Scalar.exact(0)
ONE = Scalar.exact(1)
