"""Outward-rounded interval arithmetic over dyadic rationals.

Every operation returns an interval certified to contain the exact result of
the operation applied to any members of the inputs.  Endpoints are kept on
the grid 2^-prec to control coefficient growth; rounding is always outward.
"""

from fractions import Fraction
from math import isqrt


def dyadic_floor(x, prec):
    scaled = x * (1 << prec)
    num = scaled.numerator // scaled.denominator
    return Fraction(num, 1 << prec)


def dyadic_ceil(x, prec):
    scaled = x * (1 << prec)
    num = -((-scaled.numerator) // scaled.denominator)
    return Fraction(num, 1 << prec)


def _isqrt_floor(n):
    return isqrt(n)


def _isqrt_ceil(n):
    if n <= 0:
        return 0
    r = isqrt(n - 1)
    return r + 1


class DyadicInterval:
    """Closed interval [lo, hi] with dyadic endpoints and a working precision."""

    __slots__ = ("lo", "hi", "prec")

    def __init__(self, lo, hi, prec=64):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi
        self.prec = prec

    @classmethod
    def exact(cls, value, prec=64):
        v = Fraction(value)
        return cls(v, v, prec)

    @classmethod
    def from_fractions(cls, lo, hi, prec=64):
        return cls(dyadic_floor(Fraction(lo), prec), dyadic_ceil(Fraction(hi), prec), prec)

    # -- queries ----------------------------------------------------------
    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def contains(self, x):
        return self.lo <= Fraction(x) <= self.hi

    def contains_interval(self, other):
        return self.lo <= other.lo and other.hi <= self.hi

    def straddles_zero(self):
        return self.lo <= 0 <= self.hi

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"

    def __float__(self):
        return float(self.mid)

    # -- arithmetic -------------------------------------------------------
    def _round(self, lo, hi, prec):
        return DyadicInterval(dyadic_floor(lo, prec), dyadic_ceil(hi, prec), prec)

    def __add__(self, other):
        other = _as_interval(other, self.prec)
        p = max(self.prec, other.prec)
        return self._round(self.lo + other.lo, self.hi + other.hi, p)

    __radd__ = __add__

    def __neg__(self):
        return DyadicInterval(-self.hi, -self.lo, self.prec)

    def __sub__(self, other):
        return self + (-_as_interval(other, self.prec))

    def __rsub__(self, other):
        return _as_interval(other, self.prec) - self

    def __mul__(self, other):
        other = _as_interval(other, self.prec)
        p = max(self.prec, other.prec)
        cands = [self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi]
        return self._round(min(cands), max(cands), p)

    __rmul__ = __mul__

    def recip(self):
        if self.straddles_zero():
            raise ZeroDivisionError("interval contains zero")
        return self._round(1 / self.hi, 1 / self.lo, self.prec)

    def __truediv__(self, other):
        return self * _as_interval(other, self.prec).recip()

    def __rtruediv__(self, other):
        return _as_interval(other, self.prec) * self.recip()

    def sqrt(self):
        """Enclosure of sqrt of any nonnegative member.

        A slightly negative lower endpoint (rounding slack around a true
        value >= 0) is clamped to zero.
        """
        lo = max(self.lo, Fraction(0))
        if self.hi < 0:
            raise ValueError("sqrt of a negative interval")
        p = self.prec
        scale = 1 << (2 * p)
        lo_n = (lo * scale)
        hi_n = (self.hi * scale)
        lo_r = _isqrt_floor(lo_n.numerator // lo_n.denominator)
        hi_r = _isqrt_ceil(-((-hi_n.numerator) // hi_n.denominator))
        return DyadicInterval(Fraction(lo_r, 1 << p), Fraction(hi_r, 1 << p), p)

    def round_out(self, prec):
        return DyadicInterval(dyadic_floor(self.lo, prec), dyadic_ceil(self.hi, prec), prec)

    def hull(self, other):
        return DyadicInterval(min(self.lo, other.lo), max(self.hi, other.hi),
                              max(self.prec, other.prec))

    def scale(self, q):
        q = Fraction(q)
        if q >= 0:
            return self._round(self.lo * q, self.hi * q, self.prec)
        return self._round(self.hi * q, self.lo * q, self.prec)


def _as_interval(x, prec):
    if isinstance(x, DyadicInterval):
        return x
    return DyadicInterval.from_fractions(Fraction(x), Fraction(x), prec)


def interval_poly_eval(coeffs, x):
    """Horner evaluation of a rational coefficient list on an interval."""
    acc = DyadicInterval.exact(0, x.prec)
    for c in reversed(list(coeffs)):
        acc = acc * x + DyadicInterval.from_fractions(Fraction(c), Fraction(c), x.prec)
    return acc
