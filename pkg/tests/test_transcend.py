import math
from fractions import Fraction

from bisphere.exactalg.interval import DyadicInterval
from bisphere.exactalg.transcend import (acos_enclosure, acos_point,
                                         atan_enclosure, pi_enclosure)


# 50 decimal places; the true value lies strictly between these
PI_LO = Fraction(314159265358979323846264338327950288419716939937510, 10**50)
PI_HI = PI_LO + Fraction(1, 10**50)


def test_pi_enclosure():
    for prec in (32, 64, 128, 256):
        iv = pi_enclosure(prec)
        # the enclosure and the reference window must overlap...
        assert iv.lo <= PI_HI and PI_LO <= iv.hi
        # ...and the enclosure must be tight
        assert iv.width <= Fraction(2, 1 << (prec - 4))
        if iv.width < Fraction(1, 10**50):
            assert PI_LO - Fraction(1, 10**50) <= iv.lo
            assert iv.hi <= PI_HI + Fraction(1, 10**50)


def test_atan_against_math():
    for x in (0, Fraction(1, 4), Fraction(3, 4), 1, 2, 10, -3):
        iv = atan_enclosure(DyadicInterval.exact(Fraction(x), 96), 96)
        assert iv.lo <= Fraction(math.atan(float(x))).limit_denominator(10**9) <= iv.hi \
            or (float(iv.lo) - 1e-12 <= math.atan(float(x)) <= float(iv.hi) + 1e-12)
        assert iv.width < Fraction(1, 1 << 80)


def test_acos_points():
    cases = [
        (Fraction(1), 0.0),
        (Fraction(-1), math.pi),
        (Fraction(0), math.pi / 2),
        (Fraction(1, 3), math.acos(1 / 3)),
        (Fraction(-1, 3), math.acos(-1 / 3)),
        (Fraction(9, 10), math.acos(0.9)),
    ]
    for x, want in cases:
        iv = acos_point(x, 96)
        # math.acos is only float-accurate; allow a couple of ulps
        assert float(iv.lo) - 1e-14 <= want <= float(iv.hi) + 1e-14
        assert iv.width < Fraction(1, 1 << 80)


def test_acos_monotone_interval():
    x = DyadicInterval(Fraction(1, 4), Fraction(1, 2), 64)
    iv = acos_enclosure(x, 64)
    assert float(iv.lo) <= math.acos(0.5) <= math.acos(0.25) <= float(iv.hi)


def test_known_dihedral_sum():
    """2*acos(1/3) + 4*acos(1/sqrt3) == 2*pi, checked to 100 bits."""
    prec = 128
    a = acos_point(Fraction(1, 3), prec)
    b_arg = DyadicInterval.exact(3, prec).sqrt().recip()
    b = acos_enclosure(b_arg, prec)
    total = a.scale(2) + b.scale(4)
    two_pi = pi_enclosure(prec).scale(2)
    assert total.lo <= two_pi.hi and two_pi.lo <= total.hi
    assert total.width < Fraction(1, 1 << 100)
