"""Exact arithmetic over Q and real quadratic extensions Q(sqrt(d)).

Every decision procedure in this package compares numbers exactly; floats
appear only when rendering figures. Rational values are plain
``fractions.Fraction``; irrational quadratic values are ``Surd`` instances
a + b*sqrt(d). Operations mix the two freely, and any operation whose
result is rational returns a ``Fraction``, so a ``Surd`` object is always
irrational. That makes ``Surd == Fraction`` comparisons trivially false
and keeps hashing consistent.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

Exact = Union[int, Fraction, "Surd"]


def _split_square(n: int) -> tuple[int, int]:
    """Return (s, d) with n = s*s*d and d squarefree."""
    if n <= 0:
        raise ValueError("expected a positive integer")
    s, d = 1, 1
    f = 2
    m = n
    while f * f <= m:
        k = 0
        while m % f == 0:
            m //= f
            k += 1
        s *= f ** (k // 2)
        if k % 2:
            d *= f
        f += 1
    d *= m
    return s, d


def sqrt_exact(x) -> Exact:
    """Exact square root of a nonnegative rational, as Fraction or Surd."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("square root of a negative rational")
    if x == 0:
        return Fraction(0)
    sn, dn = _split_square(x.numerator)
    sd, dd = _split_square(x.denominator)
    # sqrt(n/m) = (sn/sd) * sqrt(dn/dd) = (sn/(sd*dd)) * sqrt(dn*dd)
    coeff = Fraction(sn, sd * dd)
    rad = dn * dd
    s, d = _split_square(rad)
    coeff *= s
    if d == 1:
        return coeff
    return Surd(0, coeff, d)


def _make(a: Fraction, b: Fraction, d: int) -> Exact:
    if b == 0:
        return a
    return Surd(a, b, d)


class Surd:
    """An irrational number a + b*sqrt(d), with a, b rational and d squarefree."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        b = Fraction(b)
        if b == 0:
            raise ValueError("rational value; use Fraction instead")
        s, d0 = _split_square(int(d))
        if d0 == 1:
            raise ValueError(f"{d} is a perfect square; the value is rational")
        self.a = Fraction(a)
        self.b = b * s
        self.d = d0

    # -- helpers ---------------------------------------------------------

    def _coerce(self, other) -> tuple[Fraction, Fraction]:
        if isinstance(other, Surd):
            if other.d != self.d:
                raise ValueError(
                    f"cannot mix sqrt({self.d}) and sqrt({other.d}) exactly"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return NotImplemented

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        a, b = self.a, self.b
        if a == 0:
            return 1 if b > 0 else -1
        if b == 0:  # cannot happen by construction
            return 1 if a > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare |b*sqrt(d)| with |a| via squares
        if b * b * self.d > a * a:
            return 1 if b > 0 else -1
        return 1 if a > 0 else -1

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        oa, ob = pair
        return _make(self.a + oa, self.b + ob, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        oa, ob = pair
        return _make(self.a - oa, self.b - ob, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return self if self.sign() > 0 else -self

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        oa, ob = pair
        return _make(
            self.a * oa + self.b * ob * self.d,
            self.a * ob + self.b * oa,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        oa, ob = pair
        den = oa * oa - ob * ob * self.d
        if den == 0:
            raise ZeroDivisionError("division by zero")
        # multiply by the conjugate of the divisor
        na = self.a * oa - self.b * ob * self.d
        nb = self.b * oa - self.a * ob
        return _make(na / den, nb / den, self.d)

    def __rtruediv__(self, other):
        oa, ob = Fraction(other), Fraction(0)
        den = self.a * self.a - self.b * self.b * self.d
        return _make(oa * self.a / den, -oa * self.b / den, self.d)

    # -- comparisons -----------------------------------------------------

    def _diff_sign(self, other) -> int:
        diff = self - other
        if isinstance(diff, Surd):
            return diff.sign()
        return (diff > 0) - (diff < 0)

    def __lt__(self, other):
        return self._diff_sign(other) < 0

    def __le__(self, other):
        return self._diff_sign(other) <= 0

    def __gt__(self, other):
        return self._diff_sign(other) > 0

    def __ge__(self, other):
        return self._diff_sign(other) >= 0

    def __eq__(self, other):
        if isinstance(other, Surd):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return False  # a Surd is always irrational
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    # -- conversions -----------------------------------------------------

    def bounds(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """A rational interval [lo, hi] containing the value, width <= 2*b/2^bits."""
        scale = 1 << bits
        s = isqrt(self.d * scale * scale)
        root_lo = Fraction(s, scale)
        root_hi = Fraction(s + 1, scale)
        if self.b >= 0:
            return self.a + self.b * root_lo, self.a + self.b * root_hi
        return self.a + self.b * root_hi, self.a + self.b * root_lo

    def __floor__(self) -> int:
        bits = 32
        while True:
            lo, hi = self.bounds(bits)
            flo = lo.numerator // lo.denominator
            fhi = hi.numerator // hi.denominator
            if flo == fhi:
                return flo
            bits *= 2

    def __ceil__(self) -> int:
        return -((-self).__floor__())

    def __float__(self):
        lo, hi = self.bounds(64)
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"Surd({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        return f"{self.a} + {self.b}*sqrt({self.d})"


def is_rational(x: Exact) -> bool:
    return isinstance(x, (int, Fraction))


def exact_sign(x: Exact) -> int:
    if isinstance(x, Surd):
        return x.sign()
    return (x > 0) - (x < 0)


def exact_floor(x: Exact) -> int:
    if isinstance(x, Surd):
        return x.__floor__()
    x = Fraction(x)
    return x.numerator // x.denominator


def exact_ceil(x: Exact) -> int:
    return -exact_floor(-x)
