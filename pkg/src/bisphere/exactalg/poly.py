"""Exact rational polynomial arithmetic.

Univariate polynomials are coefficient lists, low degree to high.  The
canonical form (:class:`RationalPoly`) has integer coefficients, content 1
and a positive leading coefficient; the zero polynomial is the empty list.
Sparse multivariate polynomials (:class:`MPoly`) carry the resultant
machinery used by the elimination chain.
"""

from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# univariate helpers (lists of Fractions / ints, low degree to high)

def _strip(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(f, g):
    n = max(len(f), len(g))
    out = [Fraction(0)] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    return _strip(out)


def poly_neg(f):
    return [-c for c in f]


def poly_sub(f, g):
    return poly_add(f, poly_neg(g))


def poly_mul(f, g):
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return _strip(out)


def poly_scale(f, s):
    if s == 0:
        return []
    return [c * s for c in f]


def poly_eval(f, x):
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def poly_derivative(f):
    return _strip([i * c for i, c in enumerate(f)][1:])


def poly_divmod(f, g):
    """Division with remainder over the rationals."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = [Fraction(c) for c in f]
    q = [Fraction(0)] * max(0, len(f) - len(g) + 1)
    inv_lead = 1 / Fraction(g[-1])
    while len(f) >= len(g) and _strip(f):
        f = _strip(f)
        if len(f) < len(g):
            break
        k = len(f) - len(g)
        coef = f[-1] * inv_lead
        q[k] = coef
        for i, c in enumerate(g):
            f[i + k] -= coef * c
        f.pop()
    return _strip(q), _strip(f)


def int_clear(f):
    """Scale a rational coefficient list to primitive integers.

    Returns (ints, positive rational s) with f == s * ints.
    """
    f = _strip([Fraction(c) for c in f])
    if not f:
        return [], Fraction(1)
    den = 1
    for c in f:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    sign = 1
    if ints[-1] < 0:
        ints = [-c for c in ints]
        sign = -1
    return ints, Fraction(sign * g, den)


def int_poly_eval(f, x):
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _int_primitive(f):
    f = _strip(f)
    if not f:
        return []
    g = 0
    for c in f:
        g = gcd(g, abs(c))
    f = [c // g for c in f]
    if f[-1] < 0:
        f = [-c for c in f]
    return f


def _pseudo_rem(f, g):
    """Pseudo remainder of integer polynomials with a positive multiplier.

    lc(g)^(2*ceil((deg f - deg g + 1)/2)) * f  =  q*g + rem; the even power
    keeps the scaling positive so signs stay meaningful for Sturm chains.
    """
    d = len(f) - len(g)
    e = d + 1
    if e % 2:
        e += 1
    lead = g[-1]
    r = [c * lead**e for c in f]
    for k in range(d, -1, -1):
        r = _strip(r)
        if len(r) < len(g) + k:
            continue
        coef, rem = divmod(r[-1], lead)
        assert rem == 0
        for i, c in enumerate(g):
            r[i + k] -= coef * c
        r.pop()
    return _strip(r)


def int_gcd(f, g):
    """Primitive-PRS gcd of integer polynomial lists."""
    f, g = _int_primitive(f), _int_primitive(g)
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _int_primitive(_pseudo_rem(f, g))
        f, g = g, r
    return _int_primitive(f)


def int_squarefree(f):
    """Squarefree part of an integer polynomial list."""
    f = _int_primitive(f)
    if len(f) <= 1:
        return f
    d = _strip([i * c for i, c in enumerate(f)][1:])
    g = int_gcd(f, d)
    if len(g) == 1:
        return f
    q, r = poly_divmod([Fraction(c) for c in f], [Fraction(c) for c in g])
    assert not r
    out, _ = int_clear(q)
    return out


class RationalPoly:
    """Univariate polynomial in canonical form.

    Stored as a tuple of integers, low degree to high, with content 1 and a
    positive leading coefficient.  Any rational multiple normalizes to the
    same object, so equality of canonical forms is equality of root sets of
    associates.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        ints, _ = int_clear(list(coeffs))
        self.coeffs = tuple(ints)

    @classmethod
    def from_int_list(cls, ints):
        return cls([Fraction(c) for c in ints])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        return int_poly_eval(self.coeffs, Fraction(x))

    def sign_at(self, x):
        v = self(x)
        return (v > 0) - (v < 0)

    def derivative(self):
        return RationalPoly(poly_derivative(list(self.coeffs)))

    def __mul__(self, other):
        return RationalPoly(poly_mul(list(self.coeffs), list(other.coeffs)))

    def divides(self, other):
        """True if self divides other (exactly, over Q)."""
        if self.is_zero():
            return other.is_zero()
        _, r = poly_divmod([Fraction(c) for c in other.coeffs],
                           [Fraction(c) for c in self.coeffs])
        return not r

    def squarefree_part(self):
        return RationalPoly.from_int_list(int_squarefree(list(self.coeffs)))

    def serialize(self):
        """Integer coefficient list, low degree to high."""
        return list(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = f"{mag}"
            else:
                x = "X" if e == 1 else f"X^{e}"
                body = x if mag == 1 else f"{mag}{x}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


# ---------------------------------------------------------------------------
# sparse multivariate polynomials

class MPoly:
    """Sparse multivariate polynomial over Q.

    Terms map exponent tuples to nonzero Fractions.  Variable order is fixed
    at construction and shared by all operands.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    self.terms[tuple(mono)] = c

    @classmethod
    def const(cls, variables, c):
        n = len(variables)
        return cls(variables, {(0,) * n: Fraction(c)})

    @classmethod
    def var(cls, variables, name, power=1):
        mono = [0] * len(variables)
        mono[list(variables).index(name)] = power
        return cls(variables, {tuple(mono): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return MPoly(self.vars, out)

    def __neg__(self):
        return MPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MPoly(self.vars)
            return MPoly(self.vars, {m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, Fraction(0)) + c1 * c2
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def degree_in(self, name):
        idx = self.vars.index(name)
        return max((m[idx] for m in self.terms), default=-1)

    def coeffs_in(self, name):
        """Coefficient list in `name`, low degree to high, entries MPoly."""
        idx = self.vars.index(name)
        d = self.degree_in(name)
        if d < 0:
            return []
        buckets = [dict() for _ in range(d + 1)]
        for m, c in self.terms.items():
            rest = list(m)
            e = rest[idx]
            rest[idx] = 0
            buckets[e][tuple(rest)] = c
        return [MPoly(self.vars, b) for b in buckets]

    def involves(self, name):
        idx = self.vars.index(name)
        return any(m[idx] for m in self.terms)

    def to_univariate(self, name):
        """Coefficient list of a polynomial that only involves `name`."""
        idx = self.vars.index(name)
        d = self.degree_in(name)
        out = [Fraction(0)] * (d + 1)
        for m, c in self.terms.items():
            if any(e and i != idx for i, e in enumerate(m)):
                raise ValueError(f"polynomial involves more than {name}")
            out[m[idx]] += c
        return _strip(out)

    def subs_poly(self, name, value):
        """Substitute an MPoly value for a variable."""
        idx = self.vars.index(name)
        out = MPoly(self.vars)
        for m, c in self.terms.items():
            rest = list(m)
            e = rest[idx]
            rest[idx] = 0
            term = MPoly(self.vars, {tuple(rest): c})
            if e:
                term = term * value**e
            out = out + term
        return out

    def eval_fractions(self, assignment):
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for name, e in zip(self.vars, m):
                if e:
                    v *= Fraction(assignment[name]) ** e
            total += v
        return total

    def __eq__(self, other):
        return (isinstance(other, MPoly) and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(f"{v}^{e}" if e > 1 else v
                            for v, e in zip(self.vars, m) if e)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "MPoly(" + " + ".join(bits) + ")"


def _det_memo(rows, n):
    """Determinant of a matrix of MPoly entries by minor expansion."""
    memo = {}
    vars_ = rows[0][0].vars

    def minor(cols):
        if not cols:
            return MPoly.const(vars_, 1)
        if cols in memo:
            return memo[cols]
        row = n - len(cols)
        acc = MPoly(vars_)
        for i, col in enumerate(cols):
            entry = rows[row][col]
            if entry.is_zero():
                continue
            sub = minor(cols[:i] + cols[i + 1:])
            term = entry * sub
            acc = acc + (term if i % 2 == 0 else -term)
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


def resultant(p, q, eliminate):
    """Resultant of two MPoly operands with respect to one variable.

    Every common root of (p, q) projects to a root of the result in the
    remaining variables.  Raises ValueError if either operand is zero or
    does not involve the eliminated variable.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    pc = p.coeffs_in(eliminate)
    qc = q.coeffs_in(eliminate)
    m, n = len(pc) - 1, len(qc) - 1
    if m < 1 or n < 1:
        raise ValueError(f"{eliminate} must appear in both operands")
    size = m + n
    zero = MPoly(p.vars)
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(pc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(qc)):
            row[i + j] = c
        rows.append(row)
    return _det_memo(rows, size)
