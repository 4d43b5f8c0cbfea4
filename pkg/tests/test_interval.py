import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bisphere.exactalg.interval import DyadicInterval, dyadic_ceil, dyadic_floor


def test_rounding_helpers():
    x = Fraction(1, 3)
    lo = dyadic_floor(x, 8)
    hi = dyadic_ceil(x, 8)
    assert lo <= x <= hi
    assert hi - lo <= Fraction(1, 256)


def test_exact_and_contains():
    iv = DyadicInterval.exact(Fraction(1, 2))
    assert iv.lo == iv.hi == Fraction(1, 2)
    assert iv.contains(Fraction(1, 2))
    assert not iv.contains(Fraction(1, 3))


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        DyadicInterval(1, 0)


def test_division_excludes_zero():
    iv = DyadicInterval(-1, 1)
    with pytest.raises(ZeroDivisionError):
        iv.recip()


def test_sqrt_bounds():
    iv = DyadicInterval.exact(2, 80).sqrt()
    assert iv.lo * iv.lo <= 2 <= iv.hi * iv.hi
    assert iv.width < Fraction(1, 1 << 60)


dyadics = st.integers(-200, 200).map(lambda n: Fraction(n, 16))


@given(dyadics, dyadics, dyadics, dyadics, st.sampled_from(["add", "sub", "mul"]))
def test_containment_binary_ops(a, b, c, d, op):
    lo1, hi1 = min(a, b), max(a, b)
    lo2, hi2 = min(c, d), max(c, d)
    x = lo1 + (hi1 - lo1) / 3
    y = lo2 + (hi2 - lo2) / 7
    i1 = DyadicInterval(lo1, hi1, 32)
    i2 = DyadicInterval(lo2, hi2, 32)
    if op == "add":
        assert (i1 + i2).contains(x + y)
    elif op == "sub":
        assert (i1 - i2).contains(x - y)
    else:
        assert (i1 * i2).contains(x * y)


@given(dyadics, dyadics)
def test_containment_division(a, b):
    lo, hi = min(a, b), max(a, b)
    if lo <= 0:
        lo = lo + 201  # force positive divisor
        hi = hi + 201
    x = lo + (hi - lo) / 3
    iv = DyadicInterval(lo, hi, 48)
    one = DyadicInterval.exact(1, 48)
    assert (one / iv).contains(Fraction(1) / x)


def test_containment_fuzz_bulk():
    """Dense random fuzz of the outward-rounding invariant."""
    rng = random.Random(12345)
    ops = 0
    for _ in range(4000):
        a = Fraction(rng.randint(-1000, 1000), 1 << rng.randint(0, 6))
        b = a + Fraction(rng.randint(0, 100), 64)
        c = Fraction(rng.randint(-1000, 1000), 1 << rng.randint(0, 6))
        d = c + Fraction(rng.randint(0, 100), 64)
        x = a + (b - a) * Fraction(rng.randint(0, 16), 16)
        y = c + (d - c) * Fraction(rng.randint(0, 16), 16)
        i1 = DyadicInterval(a, b, 40)
        i2 = DyadicInterval(c, d, 40)
        assert (i1 + i2).contains(x + y)
        assert (i1 - i2).contains(x - y)
        assert (i1 * i2).contains(x * y)
        ops += 3
        if c > 0 or d < 0:
            assert (i1 / i2).contains(x / y)
            ops += 1
        if a >= 0:
            s = i1.sqrt()
            assert s.lo * s.lo <= x and x <= s.hi * s.hi
            ops += 1
    assert ops > 12000
