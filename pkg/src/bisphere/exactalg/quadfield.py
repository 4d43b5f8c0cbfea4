"""The number field Q(sqrt2, sqrt3) and exact 3-vector geometry over it.

Elements are 4-tuples (a, b, c, d) of rationals meaning
a + b*sqrt2 + c*sqrt3 + d*sqrt6.  The field is closed under the square roots
needed by the shell embeddings; `sqrt` decides exactly whether a square root
exists in the field and returns the nonnegative one when it does.
"""

from fractions import Fraction
from math import isqrt

from .interval import DyadicInterval


def _sqrt_rational(q):
    """Exact nonnegative square root of a rational, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class QF:
    """Element of Q(sqrt2, sqrt3)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    # -- constructors ----------------------------------------------------
    @classmethod
    def sqrt2(cls, scale=1):
        return cls(0, scale, 0, 0)

    @classmethod
    def sqrt3(cls, scale=1):
        return cls(0, 0, scale, 0)

    @classmethod
    def sqrt6(cls, scale=1):
        return cls(0, 0, 0, scale)

    def tuple(self):
        return (self.a, self.b, self.c, self.d)

    def is_zero(self):
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def is_rational(self):
        return self.b == 0 and self.c == 0 and self.d == 0

    # -- ring ops ---------------------------------------------------------
    def __add__(self, other):
        other = _as_qf(other)
        return QF(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self):
        return QF(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return self + (-_as_qf(other))

    def __rsub__(self, other):
        return _as_qf(other) - self

    def __mul__(self, other):
        other = _as_qf(other)
        a1, b1, c1, d1 = self.tuple()
        a2, b2, c2, d2 = other.tuple()
        return QF(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def conj_b(self):
        """sqrt2 -> -sqrt2 (and sqrt6 -> -sqrt6)."""
        return QF(self.a, -self.b, self.c, -self.d)

    def conj_c(self):
        """sqrt3 -> -sqrt3 (and sqrt6 -> -sqrt6)."""
        return QF(self.a, self.b, -self.c, -self.d)

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        p = self.conj_b() * self.conj_c() * self.conj_b().conj_c()
        norm = (self * p).a  # rational by Galois invariance
        return QF(p.a / norm, p.b / norm, p.c / norm, p.d / norm)

    def __truediv__(self, other):
        return self * _as_qf(other).inv()

    def __eq__(self, other):
        other = _as_qf(other)
        return self.tuple() == other.tuple()

    def __hash__(self):
        return hash(self.tuple())

    # -- order ------------------------------------------------------------
    def enclosure(self, prec=64):
        s2 = _ROOT_ENCLOSURES.get((2, prec))
        if s2 is None:
            s2 = DyadicInterval.exact(2, prec).sqrt()
            _ROOT_ENCLOSURES[(2, prec)] = s2
        s3 = _ROOT_ENCLOSURES.get((3, prec))
        if s3 is None:
            s3 = DyadicInterval.exact(3, prec).sqrt()
            _ROOT_ENCLOSURES[(3, prec)] = s3
        s6 = _ROOT_ENCLOSURES.get((6, prec))
        if s6 is None:
            s6 = DyadicInterval.exact(6, prec).sqrt()
            _ROOT_ENCLOSURES[(6, prec)] = s6
        out = DyadicInterval.exact(self.a, prec)
        out = out + s2.scale(self.b) + s3.scale(self.c) + s6.scale(self.d)
        return out

    def sign(self):
        if self.is_zero():
            return 0
        prec = 64
        while True:
            iv = self.enclosure(prec)
            if iv.lo > 0:
                return 1
            if iv.hi < 0:
                return -1
            prec *= 2
            if prec > 1 << 16:
                raise ArithmeticError("sign refinement runaway")

    def __lt__(self, other):
        return (self - _as_qf(other)).sign() < 0

    def __le__(self, other):
        return (self - _as_qf(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _as_qf(other)).sign() > 0

    def __ge__(self, other):
        return (self - _as_qf(other)).sign() >= 0

    def __float__(self):
        return float(self.enclosure(64).mid)

    def __repr__(self):
        parts = []
        for coef, tag in ((self.a, ""), (self.b, "*s2"), (self.c, "*s3"), (self.d, "*s6")):
            if coef:
                parts.append(f"{coef}{tag}")
        return "QF(" + (" + ".join(parts) if parts else "0") + ")"

    def pretty(self):
        """Readable expression like '5 - 3*sqrt(2)'."""
        if self.is_zero():
            return "0"
        bits = []
        for coef, tag in ((self.a, None), (self.b, "sqrt(2)"), (self.c, "sqrt(3)"),
                          (self.d, "sqrt(6)")):
            if not coef:
                continue
            mag = abs(coef)
            if tag is None:
                body = str(mag)
            elif mag == 1:
                body = tag
            else:
                body = f"{mag}*{tag}"
            bits.append(("-" if coef < 0 else "+", body))
        out = ("-" if bits[0][0] == "-" else "") + bits[0][1]
        for sign, body in bits[1:]:
            out += f" {sign} {body}"
        return out


_ROOT_ENCLOSURES = {}


def _as_qf(x):
    if isinstance(x, QF):
        return x
    return QF(Fraction(x))


def _sqrt_quad(e0, e1, rad):
    """Nonnegative sqrt of e0 + e1*sqrt(rad) inside Q(sqrt(rad)), or None.

    Returns (a, b) with (a + b*sqrt(rad))^2 = e0 + e1*sqrt(rad).
    """
    if e1 == 0:
        a = _sqrt_rational(e0)
        if a is not None:
            return (a, Fraction(0))
        b2 = Fraction(e0) / rad
        b = _sqrt_rational(b2)
        if b is not None:
            return (Fraction(0), b)
        return None
    disc = _sqrt_rational(Fraction(e0) ** 2 - rad * Fraction(e1) ** 2)
    if disc is None:
        return None
    for s in (disc, -disc):
        a2 = (Fraction(e0) + s) / 2
        a = _sqrt_rational(a2)
        if a is not None and a != 0:
            b = Fraction(e1) / (2 * a)
            return (a, b)
    return None


def qf_sqrt(x):
    """Exact nonnegative square root in Q(sqrt2, sqrt3), or None.

    Writes x = e + f*sqrt3 with e, f in Q(sqrt2) and solves
    (p + q*sqrt3)^2 = x for p, q in Q(sqrt2).
    """
    x = _as_qf(x)
    if x.sign() < 0:
        return None
    if x.is_zero():
        return QF(0)
    e = (x.a, x.b)   # e0 + e1*sqrt2
    f = (x.c, x.d)
    if f == (0, 0):
        p = _sqrt_quad(e[0], e[1], 2)
        if p is not None:
            cand = QF(p[0], p[1], 0, 0)
            return cand if cand.sign() >= 0 else -cand
        # maybe sqrt(x) = (p + q*sqrt2)*sqrt3
        p = _sqrt_quad(Fraction(e[0], 3), Fraction(e[1], 3), 2)
        if p is not None:
            cand = QF(0, 0, p[0], p[1])
            return cand if cand.sign() >= 0 else -cand
        return None
    # f != 0: q = f/(2p) with p^2 a root of t^2 - e t + 3 f^2 / 4 over Q(sqrt2)
    fe = QF(e[0], e[1])
    ff = QF(f[0], f[1])
    disc2 = fe * fe - 3 * ff * ff
    s = _sqrt_quad(disc2.a, disc2.b, 2)  # sqrt over Q(sqrt2)
    if s is None:
        return None
    for sign in (1, -1):
        p2 = (fe + sign * QF(s[0], s[1])) * Fraction(1, 2)
        p = _sqrt_quad(p2.a, p2.b, 2)
        if p is None or (p[0] == 0 and p[1] == 0):
            continue
        pq = QF(p[0], p[1])
        q = ff / (2 * pq)
        cand = QF(pq.a, pq.b, q.a, q.b)
        # q lives in Q(sqrt2); assembled as c + d*sqrt2 times sqrt3
        cand = QF(pq.a, pq.b, q.a, q.b)
        if (cand * cand) == x:
            return cand if cand.sign() >= 0 else -cand
    return None


# -- exact 3-vectors ---------------------------------------------------------

def vec(x, y, z):
    return (_as_qf(x), _as_qf(y), _as_qf(z))


def vadd(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def vsub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def vscale(u, s):
    return (u[0] * s, u[1] * s, u[2] * s)


def vdot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def vcross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def vnorm2(u):
    return vdot(u, u)


def dist2(u, v):
    return vnorm2(vsub(u, v))
