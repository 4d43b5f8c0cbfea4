"""Certified real algebraic numbers.

An AlgebraicReal is an irreducible minimal polynomial together with an
isolating interval certified (by a Sturm count) to contain exactly one real
root.  Root isolation is sign-variation bisection with exact rational
evaluation; irreducible factors come from exact rational factorization.
"""

from fractions import Fraction

from .interval import DyadicInterval, interval_poly_eval
from .poly import (RationalPoly, _pseudo_rem, _strip, int_poly_eval,
                   int_squarefree, poly_derivative, poly_divmod, poly_mul,
                   poly_sub)
from ..errors import PrecisionExhausted

DEFAULT_PREC = 64
MAX_PREC = 4096


# ---------------------------------------------------------------------------
# Sturm machinery on integer coefficient lists

def _content_reduced(f):
    """Divide out the (positive) integer content, preserving the sign."""
    from math import gcd
    f = _strip(f)
    if not f:
        return []
    g = 0
    for c in f:
        g = gcd(g, abs(c))
    return [c // g for c in f]


def sturm_chain(f):
    f = _content_reduced(f)
    chain = [f]
    d = _content_reduced([int(c) for c in poly_derivative([Fraction(c) for c in f])])
    if d:
        chain.append(d)
        while len(chain[-1]) > 1:
            # _pseudo_rem scales by an even power of the leading coefficient,
            # so the remainder keeps the sign of the true remainder
            r = _content_reduced(_pseudo_rem(chain[-2], chain[-1]))
            if not r:
                break
            chain.append([-c for c in r])
    return chain


def _variations(values):
    signs = [(v > 0) - (v < 0) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(chain, a, b):
    """Distinct real roots in the half-open interval (a, b]."""
    va = _variations([int_poly_eval(p, a) for p in chain])
    vb = _variations([int_poly_eval(p, b) for p in chain])
    return va - vb


def count_roots_open(poly_ints, a, b):
    """Distinct real roots in the open interval (a, b)."""
    if a >= b:
        return 0
    sq = int_squarefree(poly_ints)
    n = sturm_count(sturm_chain(sq), a, b)
    if int_poly_eval(sq, b) == 0:
        n -= 1
    return n


def root_bound(poly_ints):
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(poly_ints[-1])
    m = max(abs(c) for c in poly_ints[:-1]) if len(poly_ints) > 1 else 0
    return Fraction(m, lead) + 1


def factor_rational(poly):
    """Irreducible factors of a RationalPoly over Q, with multiplicities.

    Exact integer factorization is delegated to sympy; everything downstream
    (isolation, certification) re-verifies with native exact arithmetic.
    """
    import sympy

    x = sympy.Symbol("x")
    expr = sympy.Poly(list(reversed(poly.coeffs)), x, domain="QQ")
    _, factors = expr.factor_list()
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(c.p, c.q) for c in reversed(fac.all_coeffs())]
        out.append((RationalPoly(coeffs), mult))
    out.sort(key=lambda fm: fm[0].coeffs)
    return out


class AlgebraicReal:
    """Exact real number: irreducible minpoly plus an isolating interval."""

    __slots__ = ("minpoly", "lo", "hi", "_sign_lo")

    def __init__(self, minpoly, lo, hi, _certified=False):
        self.minpoly = minpoly
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        if self.lo > self.hi:
            raise ValueError("empty isolator")
        if not _certified:
            if self.lo == self.hi:
                if minpoly.sign_at(self.lo) != 0:
                    raise ValueError("degenerate isolator is not a root")
            elif count_roots_open(list(minpoly.coeffs), self.lo, self.hi) != 1:
                raise ValueError("interval does not isolate exactly one root")
        self._sign_lo = minpoly.sign_at(self.lo)

    @classmethod
    def from_rational(cls, q):
        q = Fraction(q)
        mp = RationalPoly([-q, Fraction(1)])
        return cls(mp, q, q, _certified=True)

    # -- basic queries ------------------------------------------------------
    def is_rational(self):
        return self.minpoly.degree == 1

    def as_rational(self):
        if not self.is_rational():
            raise ValueError("not rational")
        c0, c1 = self.minpoly.coeffs
        return Fraction(-c0, c1)

    def __float__(self):
        return float(self.refined(Fraction(1, 1 << 56)).mid)

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    # -- refinement ---------------------------------------------------------
    def refined(self, width):
        """Same number with isolator width <= width; minpoly unchanged."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        lo, hi = self.lo, self.hi
        if hi - lo <= width:
            return self
        if self.is_rational():
            q = self.as_rational()
            return AlgebraicReal(self.minpoly, q, q, _certified=True)
        # irreducible minpoly of degree >= 2: rational endpoints are never
        # roots, so the single interior root flips the sign between them
        sign_lo = self._sign_lo
        mp = self.minpoly
        while hi - lo > width:
            mid = (lo + hi) / 2
            if mp.sign_at(mid) == sign_lo:
                lo = mid
            else:
                hi = mid
        out = AlgebraicReal(mp, lo, hi, _certified=True)
        return out

    def enclosure(self, prec):
        r = self.refined(Fraction(1, 1 << prec))
        return DyadicInterval.from_fractions(r.lo, r.hi, prec)

    # -- comparisons ----------------------------------------------------------
    def _separated(self, other):
        return self.hi < other.lo or other.hi < self.lo

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraicReal.from_rational(other)
        if not isinstance(other, AlgebraicReal):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        if self.is_rational():
            return True
        a, b = self, other
        while True:
            if a._separated(b):
                return False
            lo, hi = min(a.lo, b.lo), max(a.hi, b.hi)
            if count_roots_open(list(self.minpoly.coeffs), lo, hi) == 1:
                return True
            w = min(a.hi - a.lo, b.hi - b.lo, Fraction(1, 4))
            a = a.refined(w / 4)
            b = b.refined(w / 4)

    def __hash__(self):
        return hash(self.minpoly)

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraicReal.from_rational(other)
        if self == other:
            return False
        a, b = self, other
        while not a._separated(b):
            w = min(max(a.hi - a.lo, b.hi - b.lo), Fraction(1, 4))
            a = a.refined(w / 4)
            b = b.refined(w / 4)
        return a.hi < b.lo

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def __repr__(self):
        return f"AlgebraicReal({self.minpoly}, [{self.lo}, {self.hi}])"


def refine(x, width):
    """Functional form of AlgebraicReal.refined."""
    return x.refined(width)


def isolate_real_roots(poly, domain):
    """All real roots of `poly` in the open interval `domain`.

    One AlgebraicReal per distinct root, each with an irreducible minpoly,
    sorted ascending.  The count is exact (Sturm).
    """
    a, b = Fraction(domain[0]), Fraction(domain[1])
    if poly.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if a >= b:
        raise ValueError("domain must be a nonempty open interval")
    roots = []
    for factor, _mult in factor_rational(poly):
        if factor.degree < 1:
            continue
        roots.extend(_isolate_factor(factor, a, b))
    roots.sort()
    return roots


def _isolate_factor(factor, a, b):
    if factor.degree == 1:
        c0, c1 = factor.coeffs
        root = Fraction(-c0, c1)
        return [AlgebraicReal.from_rational(root)] if a < root < b else []
    ints = list(factor.coeffs)
    chain = sturm_chain(ints)
    bound = root_bound(ints)
    lo, hi = max(a, -bound), min(b, bound)
    if lo >= hi:
        return []
    out = []
    stack = [(lo, hi)]
    while stack:
        x, y = stack.pop()
        n = sturm_count(chain, x, y)
        # rational points are never roots of an irreducible factor of
        # degree >= 2, so (x, y] and (x, y) agree
        if n == 0:
            continue
        if n == 1:
            out.append(AlgebraicReal(factor, x, y, _certified=True))
            continue
        mid = (x + y) / 2
        stack.append((x, mid))
        stack.append((mid, y))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# arithmetic in Q[x]/(minpoly)

class NumberField:
    """The field Q(alpha) for an AlgebraicReal alpha.

    Elements are coefficient tuples (low degree to high) of length deg(m),
    reduced modulo the minimal polynomial.
    """

    def __init__(self, root):
        self.root = root
        m = root.minpoly
        self.degree = m.degree
        lead = Fraction(m.coeffs[-1])
        # x^degree == -(lower part of m)/lead
        self._red = tuple(Fraction(-c, lead) for c in m.coeffs[:-1])
        self._refined = root

    # -- element constructors ---------------------------------------------
    def zero(self):
        return (Fraction(0),) * self.degree

    def one(self):
        return self.from_rational(1)

    def from_rational(self, q):
        out = [Fraction(0)] * self.degree
        out[0] = Fraction(q)
        return tuple(out)

    def gen(self):
        if self.degree == 1:
            return (self.root.as_rational(),)
        out = [Fraction(0)] * self.degree
        out[1] = Fraction(1)
        return tuple(out)

    def from_poly(self, coeffs):
        """Reduce a rational polynomial in alpha (any length, low to high)."""
        acc = self.zero()
        for c in reversed(list(coeffs)):
            acc = self.mul_gen(acc)
            if c:
                acc = self.add(acc, self.from_rational(c))
        return acc

    # -- ring operations ------------------------------------------------
    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scalar(self, a, q):
        q = Fraction(q)
        return tuple(x * q for x in a)

    def mul_gen(self, a):
        carry = a[-1]
        shifted = (Fraction(0),) + a[:-1]
        if carry == 0:
            return shifted
        return tuple(s + carry * r for s, r in zip(shifted, self._red))

    def mul(self, a, b):
        acc = self.zero()
        cur = a
        for c in b:
            if c != 0:
                acc = self.add(acc, self.scalar(cur, c))
            cur = self.mul_gen(cur)
        return acc

    def is_zero(self, a):
        return all(c == 0 for c in a)

    def equal(self, a, b):
        return all(x == y for x, y in zip(a, b))

    def inv(self, a):
        """Inverse via extended Euclid against the minimal polynomial."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero field element")
        m = [Fraction(c) for c in self.root.minpoly.coeffs]
        r0, r1 = m, _strip(list(a))
        s0, s1 = [], [Fraction(1)]
        while True:
            if len(r1) == 1:
                c = r1[0]
                return self.from_poly([x / c for x in s1])
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
            if not r1:
                raise ZeroDivisionError("element not invertible (reducible modulus?)")

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        out = self.one()
        cur = a
        while n:
            if n & 1:
                out = self.mul(out, cur)
            cur = self.mul(cur, cur)
            n >>= 1
        return out

    # -- real embedding ---------------------------------------------------
    def enclosure(self, a, prec):
        if self._refined.hi - self._refined.lo > Fraction(1, 1 << prec):
            self._refined = self._refined.refined(Fraction(1, 1 << prec))
        x = DyadicInterval.from_fractions(self._refined.lo, self._refined.hi, prec)
        return interval_poly_eval(a, x)

    def sign(self, a, max_prec=MAX_PREC):
        """Exact sign of the real value of a field element."""
        if self.is_zero(a):
            return 0
        prec = DEFAULT_PREC
        while prec <= max_prec:
            iv = self.enclosure(a, prec)
            if iv.lo > 0:
                return 1
            if iv.hi < 0:
                return -1
            prec *= 2
        raise PrecisionExhausted("number field sign", max_prec)

    def compare(self, a, b):
        return self.sign(self.sub(a, b))
