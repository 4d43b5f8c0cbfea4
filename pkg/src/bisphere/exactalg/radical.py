"""Arithmetic in square-root towers over Q(r).

A RadicalTower adjoins formal positive square roots g_i = sqrt(q_i) of field
elements q_i in Q(r) to the number field of an algebraic base r.  Elements
are kept multilinear: any g_i^2 is rewritten to q_i on the spot.  Exact zero
and sign tests recurse through the tower (a + b*g = 0 iff a^2 = b^2 q and the
signs of a and b oppose), so certification never relies on numerics alone;
interval enclosures are used only to decide signs of provably nonzero
quantities.
"""

from fractions import Fraction

from .algebraic import DEFAULT_PREC, MAX_PREC, NumberField
from .interval import DyadicInterval
from ..errors import BaseMismatch, PrecisionExhausted


class RadicalTower:
    """Number field Q(r) with adjoined positive square roots."""

    def __init__(self, field, squares, names=None):
        self.field = field
        self.squares = tuple(squares)
        self.names = tuple(names) if names else tuple(f"g{i}" for i in range(len(squares)))
        self._square_signs = [None] * len(squares)

    @property
    def base(self):
        return self.field.root

    def square_sign(self, i):
        if self._square_signs[i] is None:
            self._square_signs[i] = self.field.sign(self.squares[i])
        return self._square_signs[i]

    # -- element constructors -------------------------------------------
    def zero(self):
        return RadicalElement(self, {})

    def one(self):
        return self.from_field(self.field.one())

    def from_field(self, elem):
        if self.field.is_zero(elem):
            return RadicalElement(self, {})
        return RadicalElement(self, {frozenset(): elem})

    def from_rational(self, q):
        return self.from_field(self.field.from_rational(q))

    def generator(self, i):
        return RadicalElement(self, {frozenset([i]): self.field.one()})

    def sqrt_of(self, elem):
        """Generator element for a square equal to `elem`, if one was adjoined."""
        for i, q in enumerate(self.squares):
            if self.field.equal(q, elem):
                return self.generator(i)
        raise KeyError("no adjoined root with that square")


class RadicalElement:
    """Multilinear combination of square-root monomials over Q(r).

    coords maps frozensets of generator indices to nonzero field elements.
    """

    __slots__ = ("tower", "coords")

    def __init__(self, tower, coords):
        self.tower = tower
        self.coords = {m: c for m, c in coords.items() if not tower.field.is_zero(c)}

    def _check(self, other):
        if self.tower is not other.tower:
            if (self.tower.base is not other.tower.base
                    and self.tower.base != other.tower.base):
                raise BaseMismatch("elements live over different base values")
            if self.tower.squares != other.tower.squares:
                raise BaseMismatch("elements live in different towers")

    def is_zero_trivially(self):
        return not self.coords

    def __add__(self, other):
        self._check(other)
        F = self.tower.field
        out = dict(self.coords)
        for m, c in other.coords.items():
            if m in out:
                out[m] = F.add(out[m], c)
            else:
                out[m] = c
        return RadicalElement(self.tower, out)

    def __neg__(self):
        F = self.tower.field
        return RadicalElement(self.tower, {m: F.neg(c) for m, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            F = self.tower.field
            return RadicalElement(
                self.tower, {m: F.scalar(c, other) for m, c in self.coords.items()})
        self._check(other)
        F = self.tower.field
        squares = self.tower.squares
        out = {}
        for m1, c1 in self.coords.items():
            for m2, c2 in other.coords.items():
                c = F.mul(c1, c2)
                for i in m1 & m2:
                    c = F.mul(c, squares[i])
                m = m1 ^ m2
                if m in out:
                    out[m] = F.add(out[m], c)
                else:
                    out[m] = c
        return RadicalElement(self.tower, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = self.tower.one()
        cur = self
        while n:
            if n & 1:
                out = out * cur
            cur = cur * cur
            n >>= 1
        return out

    # -- exact decision procedures ------------------------------------------
    def _split(self, i):
        """Write self as a + b*g_i with a, b free of g_i."""
        a, b = {}, {}
        for m, c in self.coords.items():
            if i in m:
                b[m - {i}] = c
            else:
                a[m] = c
        return RadicalElement(self.tower, a), RadicalElement(self.tower, b)

    def _top_generator(self):
        idx = -1
        for m in self.coords:
            for i in m:
                if i > idx:
                    idx = i
        return idx

    def is_zero(self):
        """Exact test of whether the real value is zero.

        Valid when every adjoined square is nonnegative (checked lazily).
        """
        i = self._top_generator()
        if i < 0:
            return not self.coords
        if self.tower.square_sign(i) < 0:
            raise ValueError(f"square of {self.tower.names[i]} is negative")
        a, b = self._split(i)
        if b.is_zero():
            return a.is_zero()
        if a.is_zero():
            return self.tower.square_sign(i) == 0 or b.is_zero()
        # a = -b*sqrt(q): squares match and signs oppose
        q = self.tower.from_field(self.tower.squares[i])
        if not (a * a - b * b * q).is_zero():
            return False
        if self.tower.square_sign(i) == 0:
            return a.is_zero()
        return a.sign() == -b.sign()

    def sign(self, max_prec=MAX_PREC):
        """Exact sign of the real value (geometric branch: all roots >= 0)."""
        if self.is_zero():
            return 0
        prec = DEFAULT_PREC
        while prec <= max_prec:
            iv = self._enclosure_at(prec)
            if iv.lo > 0:
                return 1
            if iv.hi < 0:
                return -1
            prec *= 2
        raise PrecisionExhausted("radical sign", max_prec)

    def equals(self, other):
        return (self - other).is_zero()

    # -- enclosures --------------------------------------------------------
    def _enclosure_at(self, prec, signs=None):
        F = self.tower.field
        total = DyadicInterval.exact(0, prec)
        root_ivs = {}
        for m, c in self.coords.items():
            iv = F.enclosure(c, prec)
            for i in sorted(m):
                if i not in root_ivs:
                    sq = F.enclosure(self.tower.squares[i], prec)
                    root_ivs[i] = sq.sqrt()
                g = root_ivs[i]
                if signs is not None and signs[i] < 0:
                    g = -g
                iv = iv * g
            total = total + iv
        return total

    def enclose(self, signs=None, width=None, start_prec=DEFAULT_PREC,
                max_prec=MAX_PREC):
        """Certified interval for the value under a sign assignment.

        signs gives the branch of each adjoined root (+1/-1); the default is
        the all-positive geometric branch.  Raises PrecisionExhausted if the
        requested width is unreachable at max_prec.
        """
        if signs is None:
            signs = (1,) * len(self.tower.squares)
        prec = start_prec
        best = None
        while prec <= max_prec:
            iv = self._enclosure_at(prec, signs)
            best = iv if best is None else iv
            if width is None or iv.width <= width:
                return iv
            prec *= 2
        if width is None:
            return best
        raise PrecisionExhausted("radical enclosure", max_prec)


def radical_mul(a, b):
    """Product of radical elements sharing a base; canonical multilinear form."""
    if not isinstance(a, RadicalElement) or not isinstance(b, RadicalElement):
        raise TypeError("radical_mul expects RadicalElement operands")
    a._check(b)
    return a * b


def enclose(a, signs=None, width=None, **kw):
    return a.enclose(signs=signs, width=width, **kw)


class RadicalComplex:
    """Pair (re, im) of radical elements used as a unit-modulus rotation."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = re
        self.im = im

    def __mul__(self, other):
        return RadicalComplex(self.re * other.re - self.im * other.im,
                              self.re * other.im + self.im * other.re)

    def __pow__(self, n):
        out = RadicalComplex(self.re.tower.one(), self.re.tower.zero())
        cur = self
        while n:
            if n & 1:
                out = out * cur
            cur = cur * cur
            n >>= 1
        return out


def auxiliary_tower(r):
    """The four auxiliary square roots over Q(r) used by the skew analysis.

    X0^2 = r/((2+r)(2r+1)),  X1^2 = 3r^2+6r-1,
    X2^2 = 2/((2+r)(1+2r)),  X3^2 = -r^2+6r+3.
    """
    F = NumberField(r)
    x = F.gen()
    two = F.from_rational(2)
    one = F.one()
    d = F.mul(F.add(two, x), F.add(F.scalar(x, 2), one))  # (2+r)(2r+1)
    d_inv = F.inv(d)
    q0 = F.mul(x, d_inv)
    q1 = F.from_poly([-1, 6, 3])
    q2 = F.scalar(d_inv, 2)
    q3 = F.from_poly([3, 6, -1])
    return RadicalTower(F, (q0, q1, q2, q3), names=("X0", "X1", "X2", "X3"))
