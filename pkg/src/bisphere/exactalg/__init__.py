"""Exact algebra: rational polynomials, certified intervals, algebraic reals,
square-root towers and the quadratic field used by the geometric modules."""

from .poly import MPoly, RationalPoly, resultant
from .interval import DyadicInterval
from .algebraic import (AlgebraicReal, NumberField, factor_rational,
                        isolate_real_roots, refine)
from .radical import (RadicalComplex, RadicalElement, RadicalTower,
                      auxiliary_tower, enclose, radical_mul)
from .transcend import acos_enclosure, acos_point, atan_enclosure, pi_enclosure
from .quadfield import QF, qf_sqrt

__all__ = [
    "MPoly", "RationalPoly", "resultant", "DyadicInterval",
    "AlgebraicReal", "NumberField", "factor_rational", "isolate_real_roots",
    "refine", "RadicalComplex", "RadicalElement", "RadicalTower",
    "auxiliary_tower", "enclose", "radical_mul",
    "acos_enclosure", "acos_point", "atan_enclosure", "pi_enclosure",
    "QF", "qf_sqrt",
]
