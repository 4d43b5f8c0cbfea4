"""Certified enclosures of pi, arctan and arccos.

arctan uses the alternating Taylor series after angle-halving reductions,
with the first omitted term as a rigorous tail bound; pi comes from Machin's
formula.  All arithmetic goes through DyadicInterval, so the results are
certified enclosures.
"""

from fractions import Fraction

from .interval import DyadicInterval, dyadic_ceil, dyadic_floor

_PI_CACHE = {}


def _atan_series_fraction(x, prec):
    """Enclosure of arctan(x) for an exact rational |x| <= 1/2."""
    # alternating series: error bounded by the first omitted term
    target = Fraction(1, 1 << (prec + 4))
    total = Fraction(0)
    term = Fraction(x)
    x2 = Fraction(x) * Fraction(x)
    k = 0
    while True:
        total += term / (2 * k + 1) * (1 if k % 2 == 0 else -1)
        term *= x2
        k += 1
        tail = abs(term) / (2 * k + 1)
        if tail < target:
            break
    return DyadicInterval(dyadic_floor(total - tail, prec + 4),
                          dyadic_ceil(total + tail, prec + 4), prec)


def pi_enclosure(prec):
    """Machin: pi = 16*arctan(1/5) - 4*arctan(1/239)."""
    if prec in _PI_CACHE:
        return _PI_CACHE[prec]
    a = _atan_series_fraction(Fraction(1, 5), prec + 8)
    b = _atan_series_fraction(Fraction(1, 239), prec + 8)
    out = (a.scale(16) - b.scale(4)).round_out(prec)
    _PI_CACHE[prec] = out
    return out


def atan_enclosure(x, prec):
    """Enclosure of arctan over an interval."""
    if x.lo >= 0:
        return DyadicInterval(_atan_point(x.lo, prec, up=False),
                              _atan_point(x.hi, prec, up=True), prec)
    if x.hi <= 0:
        return -atan_enclosure(-x, prec)
    neg = atan_enclosure(DyadicInterval(x.lo, 0, x.prec), prec)
    pos = atan_enclosure(DyadicInterval(0, x.hi, x.prec), prec)
    return neg.hull(pos)


def _atan_point(x, prec, up):
    """Directed bound on arctan at an exact dyadic x >= 0."""
    if x == 0:
        return Fraction(0)
    iv = _atan_point_interval(x, prec)
    return iv.hi if up else iv.lo


def _atan_point_interval(x, prec):
    work = prec + 16
    t = DyadicInterval.exact(Fraction(x), work)
    halvings = 0
    while t.hi > Fraction(1, 2):
        # arctan t = 2 arctan( t / (1 + sqrt(1 + t^2)) )
        t = t / ((t * t + 1).sqrt() + 1)
        halvings += 1
        if halvings > 80:
            raise ArithmeticError("arctan reduction failed to converge")
    out = _atan_series_interval(t, work)
    return out.scale(1 << halvings).round_out(prec)


def _atan_series_interval(t, prec):
    target = Fraction(1, 1 << (prec + 4))
    acc = DyadicInterval.exact(0, prec + 8)
    term = t
    t2 = t * t
    bound = max(abs(t.lo), abs(t.hi))
    term_bound = bound
    k = 0
    while True:
        acc = acc + term.scale(Fraction((-1) ** (k % 2), 2 * k + 1))
        term = term * t2
        term_bound *= bound * bound
        k += 1
        tail = term_bound / (2 * k + 1)
        if tail < target:
            break
    slack = DyadicInterval(-tail, tail, prec + 8)
    return acc + slack


def acos_point(x, prec):
    """Enclosure of arccos at an exact rational x in [-1, 1]."""
    x = Fraction(x)
    if not -1 <= x <= 1:
        raise ValueError(f"arccos argument {x} outside [-1, 1]")
    work = prec + 16
    if x == 1:
        return DyadicInterval.exact(0, prec)
    if x == -1:
        return pi_enclosure(prec)
    half_pi = pi_enclosure(work).scale(Fraction(1, 2))
    if x == 0:
        return half_pi.round_out(prec)
    xi = DyadicInterval.from_fractions(x, x, work)
    y = (1 - xi * xi).sqrt()
    t = y / abs(x)
    at = atan_enclosure(t, work)
    if x > 0:
        return at.round_out(prec)
    return (pi_enclosure(work) - at).round_out(prec)


def acos_enclosure(x, prec):
    """Enclosure of arccos over an interval inside [-1, 1].

    Endpoints may spill slightly outside [-1, 1] from outward rounding; they
    are clamped, which keeps the enclosure valid for any member of the
    mathematical domain.
    """
    lo = min(max(x.lo, Fraction(-1)), Fraction(1))
    hi = min(max(x.hi, Fraction(-1)), Fraction(1))
    upper = acos_point(lo, prec)
    lower = acos_point(hi, prec)
    return DyadicInterval(lower.lo, upper.hi, prec)
