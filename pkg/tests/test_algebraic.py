from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bisphere.exactalg.algebraic import (AlgebraicReal, NumberField,
                                         isolate_real_roots, refine)
from bisphere.exactalg.poly import RationalPoly, poly_mul


def test_isolate_sqrt2_minus_1():
    roots = isolate_real_roots(RationalPoly([-1, 2, 1]), (0, 1))
    assert len(roots) == 1
    x = roots[0].refined(Fraction(1, 10**8))
    assert abs(x.mid - Fraction(41421356, 10**8)) < Fraction(1, 10**6)


def test_isolate_3_minus_2sqrt2():
    roots = isolate_real_roots(RationalPoly([1, -6, 1]), (0, 1))
    assert len(roots) == 1
    x = roots[0].refined(Fraction(1, 10**8))
    assert abs(x.mid - Fraction(17157287, 10**8)) < Fraction(1, 10**6)


def test_isolate_no_real_roots():
    assert isolate_real_roots(RationalPoly([1, 0, 1]), (0, 1)) == []


def test_isolate_rational_root():
    roots = isolate_real_roots(RationalPoly([-1, 6]), (0, 1))
    assert len(roots) == 1 and roots[0].as_rational() == Fraction(1, 6)


def test_refine_width_and_idempotent_minpoly():
    (x,) = isolate_real_roots(RationalPoly([-1, 2, 1]), (0, 1))
    w = Fraction(1, 1 << 40)
    y = refine(x, w)
    assert y.hi - y.lo <= w
    assert y.minpoly == x.minpoly
    z = refine(y, w)
    assert z.minpoly == y.minpoly
    assert z.hi - z.lo <= w
    assert y.lo <= Fraction(41421356237, 10**11) + Fraction(1, 10**9)


def test_refine_second_table_root():
    (x,) = isolate_real_roots(RationalPoly([1, -6, 1]), (0, 1))
    y = refine(x, Fraction(1, 1 << 20))
    assert abs(y.mid - Fraction(17157, 10**5)) < Fraction(1, 10**4)


def test_ordering_and_equality():
    (a,) = isolate_real_roots(RationalPoly([-1, 2, 1]), (0, 1))
    (b,) = isolate_real_roots(RationalPoly([1, -6, 1]), (0, 1))
    assert b < a
    (a2,) = isolate_real_roots(RationalPoly([-2, 4, 2]), (0, 1))
    assert a == a2
    # two distinct roots of one quartic (x^2-2)(x^2-3) style check
    roots = isolate_real_roots(RationalPoly([6, 0, -5, 0, 1]), (1, 2))
    assert len(roots) == 2
    assert roots[0] < roots[1]
    assert roots[0] != roots[1]


@settings(max_examples=60)
@given(st.lists(st.integers(-8, 8), min_size=1, max_size=4, unique=True),
       st.integers(2, 5))
def test_root_count_exactness_on_linear_products(roots, denom):
    """Products of known linear factors isolate exactly the planted roots."""
    coeffs = [Fraction(1)]
    vals = sorted(Fraction(n, denom) for n in roots)
    for v in vals:
        coeffs = poly_mul(coeffs, [-v, Fraction(1)])
    got = isolate_real_roots(RationalPoly(coeffs), (-10, 10))
    assert len(got) == len(vals)
    for g, v in zip(got, vals):
        assert g.as_rational() == v


def test_numberfield_arithmetic():
    (r,) = isolate_real_roots(RationalPoly([-1, 2, 1]), (0, 1))  # sqrt2 - 1
    F = NumberField(r)
    x = F.gen()
    # r^2 + 2r - 1 == 0
    assert F.is_zero(F.add(F.add(F.mul(x, x), F.scalar(x, 2)), F.from_rational(-1)))
    # (1 + r)^2 == 2
    one_plus = F.add(F.one(), x)
    assert F.equal(F.mul(one_plus, one_plus), F.from_rational(2))
    # inverse
    inv = F.inv(one_plus)
    assert F.equal(F.mul(inv, one_plus), F.one())
    # sign of r - 0.41 is positive, r - 0.42 negative
    assert F.sign(F.sub(x, F.from_rational(Fraction(41, 100)))) == 1
    assert F.sign(F.sub(x, F.from_rational(Fraction(42, 100)))) == -1
    assert F.sign(F.zero()) == 0


def test_numberfield_on_rational_base():
    r = AlgebraicReal.from_rational(Fraction(1, 6))
    F = NumberField(r)
    x = F.gen()
    assert F.equal(F.mul(x, F.from_rational(6)), F.one())
    assert F.sign(F.sub(x, F.from_rational(Fraction(1, 7)))) == 1


def test_sign_precision_exhausted():
    from bisphere.errors import PrecisionExhausted
    (r,) = isolate_real_roots(RationalPoly([-1, 2, 1]), (0, 1))
    F = NumberField(r)
    # a nonzero element smaller than the 64-bit resolution cannot be signed
    # without raising the cap
    tiny = F.sub(F.gen(), F.from_rational(r.refined(Fraction(1, 1 << 200)).mid))
    with pytest.raises(PrecisionExhausted):
        F.sign(tiny, max_prec=64)
    assert F.sign(tiny) != 0  # the default cap resolves it
