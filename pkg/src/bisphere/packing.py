"""Close-packings, octahedral-hole filling, and certified compactness.

Sphere centers are integer triples (a, b, c) in a diagonal frame: the real
position is (a*u1, b*u2, c*u3) with axis units u_i = sqrt(w_i).  For the
layer frame used by the builders, (u1, u2, u3) = (1/3, sqrt3/3, sqrt6/3),
so squared distances are rational and oriented volumes are rational
multiples of sqrt2.  Scalar triple products in such a frame differ from
their Euclidean values by the fixed positive factor sqrt(w1*w2*w3), which
turns every geometric decision here (tangency, volume, coplanarity,
separating axis) into integer arithmetic; nothing is decided by tolerance.
"""

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import BisphereError
from .exactalg.algebraic import NumberField
from .exactalg.interval import DyadicInterval
from .exactalg.quadfield import QF, qf_sqrt
from .exactalg.transcend import acos_enclosure, pi_enclosure
from .shell import classify_points

LARGE, SMALL = "L", "S"

# squared tangency distances: L-L = 4, L-S = (1 + r)^2 * ... = 2 at r = sqrt2-1
_T2_LL = Fraction(4)
_T2_LS = Fraction(2)
_T2_SS = QF(12, -8)      # (2r)^2 = 12 - 8*sqrt2, irrational


# ---------------------------------------------------------------------------
# integer 3-vector helpers

def _ivadd(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def _ivsub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def _ivscale(u, s):
    return (u[0] * s, u[1] * s, u[2] * s)


def _icross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _idet(u, v, w):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


# ---------------------------------------------------------------------------
# stacking sequences

STACK_LETTERS = "ABC"
# horizontal offsets of the three layer positions, in layer-frame (a, b) units
_OFFSETS = {"A": (0, 0), "B": (3, 1), "C": (6, 2)}


class StackingSequence:
    """Periodic word over {A, B, C} with no two cyclically equal neighbors."""

    def __init__(self, word):
        word = str(word).upper()
        if len(word) < 2:
            raise ValueError("a stacking sequence needs at least two layers")
        if any(c not in STACK_LETTERS for c in word):
            raise ValueError(f"letters must be A, B or C: {word!r}")
        for t in range(len(word)):
            if word[t] == word[(t + 1) % len(word)]:
                raise ValueError(f"layer {t} repeats its successor in {word!r}")
        self.word = word

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return self.word

    def __eq__(self, other):
        return isinstance(other, StackingSequence) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def canonical(self):
        return canonical_stacking(self.word)

    def equivalent(self, other):
        other = other if isinstance(other, StackingSequence) else StackingSequence(other)
        return self.canonical() == other.canonical()


def canonical_stacking(word):
    """Minimal form under cyclic shift, reversal, and letter relabeling."""
    best = None
    n = len(word)
    for perm in itertools.permutations(STACK_LETTERS):
        table = {a: b for a, b in zip(STACK_LETTERS, perm)}
        mapped = "".join(table[c] for c in word)
        for s in (mapped, mapped[::-1]):
            for i in range(n):
                cand = s[i:] + s[:i]
                if best is None or cand < best:
                    best = cand
    return best


def enumerate_stackings(max_period=6):
    """One representative word per equivalence class (relabel, shift,
    reversal) of valid stacking words of period 2..max_period."""
    seen = {}
    for n in range(2, max_period + 1):
        for word in itertools.product(STACK_LETTERS, repeat=n):
            w = "".join(word)
            if any(w[t] == w[(t + 1) % n] for t in range(n)):
                continue
            seen.setdefault(canonical_stacking(w), w)
    return sorted(seen.keys(), key=lambda w: (len(w), w))


# ---------------------------------------------------------------------------
# the model

@dataclass(frozen=True)
class Frame:
    """Diagonal metric: the squared length of an integer step (da, db, dc)
    is w1*da^2 + w2*db^2 + w3*dc^2."""
    weights: tuple

    def dist2(self, d):
        w1, w2, w3 = self.weights
        return w1 * d[0] * d[0] + w2 * d[1] * d[1] + w3 * d[2] * d[2]

    def scaled_metric(self):
        """(integer weights, scale): dist2(d) == int_form(d) / scale."""
        s = 1
        for w in self.weights:
            s = s * w.denominator // gcd(s, w.denominator)
        iw = tuple(int(w * s) for w in self.weights)
        return iw, s

    def volume_unit(self):
        """Real volume of a unit integer determinant, in Q(sqrt2, sqrt3)."""
        w1, w2, w3 = self.weights
        v = qf_sqrt(QF(w1 * w2 * w3))
        if v is None:
            raise ValueError("frame volume unit is outside Q(sqrt2, sqrt3)")
        return v

    def axis_units(self):
        out = []
        for w in self.weights:
            u = qf_sqrt(QF(w))
            if u is None:
                raise ValueError("frame axis unit is outside Q(sqrt2, sqrt3)")
            out.append(u)
        return tuple(out)

    def point(self, p):
        u1, u2, u3 = self.axis_units()
        return (u1 * p[0], u2 * p[1], u3 * p[2])


LAYER_FRAME = Frame((Fraction(1, 9), Fraction(1, 3), Fraction(2, 3)))
CUBIC_FRAME = Frame((Fraction(2), Fraction(2), Fraction(2)))


@dataclass
class PackingModel:
    frame: Frame
    basis: tuple            # three integer triples, linearly independent
    motif: tuple            # ((a, b, c), kind) pairs
    stacking: str = None    # builder metadata, None for hand-made models
    filled: bool = False

    def __post_init__(self):
        if _idet(*self.basis) == 0:
            raise ValueError("basis vectors are linearly dependent")

    def large_indices(self):
        return [i for i, (_, kind) in enumerate(self.motif) if kind == LARGE]

    def small_indices(self):
        return [i for i, (_, kind) in enumerate(self.motif) if kind == SMALL]

    def cell_determinant(self):
        return abs(_idet(*self.basis))

    def cell_volume(self):
        return self.frame.volume_unit() * self.cell_determinant()


# ---------------------------------------------------------------------------
# builders

def build_close_packing(seq):
    """Unit spheres on stacked triangular-grid layers.

    Layer t sits at height t * 2*sqrt6/3 with the horizontal offset of its
    letter; adjacent layers sit in each other's voids, so every sphere is
    tangent to 6 in-layer and 3 + 3 out-of-layer neighbors.
    """
    if not isinstance(seq, StackingSequence):
        seq = StackingSequence(seq)
    n = len(seq)
    motif = []
    for t, letter in enumerate(seq.word):
        a, b = _OFFSETS[letter]
        motif.append(((a, b, 2 * t), LARGE))
    basis = ((6, 0, 0), (3, 3, 0), (0, 0, 2 * n))
    return PackingModel(LAYER_FRAME, basis, tuple(motif), stacking=seq.word)


def fill_octahedral_holes(p):
    """One sphere of radius sqrt2 - 1 in each octahedral hole.

    The hole between layers t and t+1 sits at the horizontal position of the
    letter used by neither layer, halfway up; each added sphere is verified
    tangent to exactly six unit spheres.
    """
    _require_close_packing(p)
    word = p.stacking
    n = len(word)
    motif = list(p.motif)
    for t in range(n):
        here, above = word[t], word[(t + 1) % n]
        (hole,) = set(STACK_LETTERS) - {here, above}
        a, b = _OFFSETS[hole]
        motif.append(((a, b, 2 * t + 1), SMALL))
    out = PackingModel(p.frame, p.basis, tuple(motif), stacking=word, filled=True)
    graph = contact_graph(out)
    for i in out.small_indices():
        if graph.degree(i) != 6:
            raise BisphereError("fill produced a hole not tangent to 6 spheres")
    return out


def _require_close_packing(p):
    if p.filled or p.stacking is None or any(k != LARGE for _, k in p.motif):
        raise BisphereError("input is not an unfilled close-packing")
    graph = contact_graph(p)
    for i in range(len(p.motif)):
        if graph.degree(i) != 12:
            raise BisphereError("input is not a close-packing: "
                                f"sphere {i} has {graph.degree(i)} contacts")


def conventional_fcc_cell(filled=True):
    """The cubic cell of side 2*sqrt2 (4 large spheres; rock salt when
    filled).  Census numbers are legible in this cell."""
    large = [(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
    small = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
    motif = [(q, LARGE) for q in large]
    if filled:
        motif += [(q, SMALL) for q in small]
    basis = ((2, 0, 0), (0, 2, 0), (0, 0, 2))
    return PackingModel(CUBIC_FRAME, basis, tuple(motif), filled=filled)


# ---------------------------------------------------------------------------
# neighbor enumeration and the contact graph

def _matrix_inverse(rows):
    ((a, b, c), (d, e, f), (g, h, i)) = rows
    det = Fraction(_idet(*rows))
    adj = [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]
    return [[Fraction(x) / det for x in row] for row in adj]


def _sqrt_ceil(q):
    q = Fraction(q)
    n = -((-q.numerator) // q.denominator)  # ceil to an integer
    r = isqrt(max(n, 0))
    return r if r * r == n else r + 1


_INVERSE_CACHE = {}


def _cached_inverse(basis):
    if basis not in _INVERSE_CACHE:
        _INVERSE_CACHE[basis] = _matrix_inverse(basis)
    return _INVERSE_CACHE[basis]


def _translates_within(p, delta, limit2):
    """All lattice vectors t with |delta + t|^2 <= limit2 in the frame metric."""
    w = p.frame.weights
    iw, scale = p.frame.scaled_metric()
    limit_scaled = Fraction(limit2) * scale
    tmax = []
    for axis in range(3):
        bound = _sqrt_ceil(Fraction(limit2) / w[axis])
        tmax.append(bound + abs(delta[axis]))
    inv = _cached_inverse(p.basis)
    ranges = []
    for i in range(3):
        m = sum(abs(inv[j][i]) * tmax[j] for j in range(3))
        ranges.append(int(m) + 1)
    out = []
    b1, b2, b3 = p.basis
    w1, w2, w3 = iw
    da, db, dc = delta
    for n1 in range(-ranges[0], ranges[0] + 1):
        for n2 in range(-ranges[1], ranges[1] + 1):
            for n3 in range(-ranges[2], ranges[2] + 1):
                ta = n1 * b1[0] + n2 * b2[0] + n3 * b3[0]
                tb = n1 * b1[1] + n2 * b2[1] + n3 * b3[1]
                tc = n1 * b1[2] + n2 * b2[2] + n3 * b3[2]
                ea, eb, ec = da + ta, db + tb, dc + tc
                if w1 * ea * ea + w2 * eb * eb + w3 * ec * ec <= limit_scaled:
                    out.append((ta, tb, tc))
    return out


# all tangencies happen at center distance <= 2; the interaction range of 4
# (twice that) is exact and sufficient
INTERACTION_RANGE2 = Fraction(16)


def sphere_neighbors(p, i, limit2=INTERACTION_RANGE2):
    """(j, translate, squared distance) for all spheres within range of
    motif sphere i, excluding the sphere itself."""
    xi, _ = p.motif[i]
    out = []
    for j, (xj, _) in enumerate(p.motif):
        delta = _ivsub(xj, xi)
        for t in _translates_within(p, delta, limit2):
            if j == i and t == (0, 0, 0):
                continue
            out.append((j, t, p.frame.dist2(_ivadd(delta, t))))
    return out


def _tangent2(kind_a, kind_b):
    if kind_a == kind_b == LARGE:
        return _T2_LL
    if kind_a == kind_b == SMALL:
        return _T2_SS
    return _T2_LS


def _is_tangent(kind_a, kind_b, d2):
    target = _tangent2(kind_a, kind_b)
    if isinstance(target, QF):
        return False  # a rational distance never equals 12 - 8*sqrt2
    return d2 == target


def _no_overlap(kind_a, kind_b, d2):
    target = _tangent2(kind_a, kind_b)
    if isinstance(target, QF):
        return (QF(d2) - target).sign() >= 0
    return d2 >= target


@dataclass
class ContactGraph:
    model: PackingModel
    edges: list   # (i, j, translate) with i <= j, exact tangency

    def degree(self, i):
        n = 0
        for (a, b, t) in self.edges:
            if a == i:
                n += 1
            if b == i:
                n += 1
        return n

    def degrees_by_kind(self):
        out = {}
        for i, (_, kind) in enumerate(self.model.motif):
            out.setdefault(kind, set()).add(self.degree(i))
        return out


def contact_graph(p):
    """Exact tangency edges over one period plus interacting translates.

    Each undirected contact class appears once; a sphere touching its own
    translate contributes a single (i, i, t) edge, counted twice in the
    degree of i.
    """
    uniq = set()
    for i in range(len(p.motif)):
        ki = p.motif[i][1]
        for (j, t, d2) in sphere_neighbors(p, i):
            kj = p.motif[j][1]
            if not _no_overlap(ki, kj, d2):
                raise BisphereError(f"spheres {i} and {j}{t} overlap")
            if not _is_tangent(ki, kj, d2):
                continue
            if i < j:
                uniq.add((i, j, t))
            elif i > j:
                uniq.add((j, i, tuple(-x for x in t)))
            else:
                uniq.add((i, i, max(t, tuple(-x for x in t))))
    return ContactGraph(p, sorted(uniq))


# ---------------------------------------------------------------------------
# compactness: tetrahedra, face matching, separation, volume

@dataclass
class CompactnessVerdict:
    compact: bool
    reason: str
    simplex_census: dict        # sorted kind string -> count per cell
    tetra_volume: QF            # exact total per cell
    cell_volume: QF
    deficit: QF

    def __bool__(self):
        return self.compact


def _tetra_classes(p):
    """Translation classes of 4-cliques of mutually tangent spheres.

    A tetra is a tuple of (motif index, translate) pairs, anchored so its
    least vertex has translate (0, 0, 0).
    """
    classes = set()
    for i in range(len(p.motif)):
        ki = p.motif[i][1]
        nbrs = [(j, t) for (j, t, d2) in sphere_neighbors(p, i)
                if _is_tangent(ki, p.motif[j][1], d2)]
        for combo in itertools.combinations(nbrs, 3):
            if _mutually_tangent(p, combo):
                classes.add(_anchor([(i, (0, 0, 0)), *combo]))
    return sorted(classes)


def _mutually_tangent(p, verts):
    for (ju, tu), (jv, tv) in itertools.combinations(verts, 2):
        d = _ivsub(_ivadd(p.motif[jv][0], tv), _ivadd(p.motif[ju][0], tu))
        if not _is_tangent(p.motif[ju][1], p.motif[jv][1], p.frame.dist2(d)):
            return False
    return True


def _anchor(verts):
    verts = sorted(verts)
    t0 = verts[0][1]
    return tuple((j, _ivsub(t, t0)) for (j, t) in verts)


def _tetra_points(p, tetra):
    return [_ivadd(p.motif[j][0], t) for (j, t) in tetra]


def _tetra_kinds(p, tetra):
    return "".join(sorted(p.motif[j][1] for (j, _) in tetra))


def verify_compact(p, check_separation=True):
    """Certify that the tangency tetrahedra tile space face to face.

    (a) every pair of nearby tetrahedra has disjoint interiors (exact
    separating-axis test), (b) every triangular face is shared by exactly
    two tetrahedra, and (c) the tetra volumes add up to the cell volume
    exactly.  Failures produce a verdict, not an error.
    """
    classes = _tetra_classes(p)
    census = {}
    six_vol = 0
    for tet in classes:
        kinds = _tetra_kinds(p, tet)
        census[kinds] = census.get(kinds, 0) + 1
        pts = _tetra_points(p, tet)
        d = abs(_idet(_ivsub(pts[1], pts[0]), _ivsub(pts[2], pts[0]),
                      _ivsub(pts[3], pts[0])))
        if d == 0:
            return CompactnessVerdict(False, "degenerate tetrahedron", census,
                                      QF(0), p.cell_volume(), p.cell_volume())
        six_vol += d
    unit = p.frame.volume_unit()
    tetra_volume = unit * Fraction(six_vol, 6)
    cell_volume = p.cell_volume()
    deficit = cell_volume - tetra_volume

    reasons = []
    if not _faces_match(classes):
        reasons.append("faces do not match pairwise")
    if not deficit.is_zero():
        reasons.append(f"volume deficit {deficit.pretty()}")
    if check_separation and not _interiors_disjoint(p, classes):
        reasons.append("overlapping tetrahedra")
    if reasons:
        return CompactnessVerdict(False, "; ".join(reasons), census,
                                  tetra_volume, cell_volume, deficit)
    return CompactnessVerdict(True, "face-to-face simplex tiling", census,
                              tetra_volume, cell_volume, deficit)


def _faces_match(classes):
    counts = {}
    for tet in classes:
        for face in itertools.combinations(tet, 3):
            key = _anchor(face)
            counts[key] = counts.get(key, 0) + 1
    return all(n == 2 for n in counts.values())


def _interiors_disjoint(p, classes):
    pts = {tet: _tetra_points(p, tet) for tet in classes}
    iw, _ = p.frame.scaled_metric()
    for t1, t2 in itertools.combinations_with_replacement(classes, 2):
        # any overlapping pair has first vertices within 4 (two diameters)
        delta = _ivsub(pts[t2][0], pts[t1][0])
        for t in _translates_within(p, delta, Fraction(16)):
            if t1 == t2 and t == (0, 0, 0):
                continue
            moved = [_ivadd(q, t) for q in pts[t2]]
            if not _bounding_overlap(iw, pts[t1], moved):
                continue
            if not _separated(pts[t1], moved):
                return False
    return True


def _centroid4(pts):
    return tuple(sum(q[i] for q in pts) for i in range(3))


def _bounding_overlap(iw, pts1, pts2):
    """Exact quick filter on centroid balls (coordinates scaled by 4).

    Uses (sqrt(a) + sqrt(b))^2 <= 2(a + b), so anything it skips is
    certainly disjoint.
    """
    w1, w2, w3 = iw

    def d2(u, v):
        a, b, c = u[0] - v[0], u[1] - v[1], u[2] - v[2]
        return w1 * a * a + w2 * b * b + w3 * c * c

    c1, c2 = _centroid4(pts1), _centroid4(pts2)
    dd = d2(c1, c2)
    r1 = max(d2(_ivscale(q, 4), c1) for q in pts1)
    r2 = max(d2(_ivscale(q, 4), c2) for q in pts2)
    return dd <= 2 * (r1 + r2)


def _separated(pts1, pts2):
    """Exact separating-axis test for two nondegenerate tetrahedra.

    Interiors are disjoint iff projections separate (touching allowed) on
    some axis among the 8 face normals and 36 edge cross products.  In a
    diagonal frame the projection onto cross(u, v) is a fixed positive
    multiple of det(u, v, .), so the whole test is integer determinants.
    """
    base = pts1[0]
    rel1 = [_ivsub(q, base) for q in pts1]
    rel2 = [_ivsub(q, base) for q in pts2]
    axes = []
    for (a, b, c) in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        axes.append((_ivsub(rel1[b], rel1[a]), _ivsub(rel1[c], rel1[a])))
        axes.append((_ivsub(rel2[b], rel2[a]), _ivsub(rel2[c], rel2[a])))
    edges1 = [_ivsub(rel1[j], rel1[i]) for i in range(4) for j in range(i + 1, 4)]
    edges2 = [_ivsub(rel2[j], rel2[i]) for i in range(4) for j in range(i + 1, 4)]
    for e1 in edges1:
        for e2 in edges2:
            axes.append((e1, e2))
    for (u, v) in axes:
        n = _icross(u, v)
        if n == (0, 0, 0):
            continue
        proj1 = [n[0] * q[0] + n[1] * q[1] + n[2] * q[2] for q in rel1]
        proj2 = [n[0] * q[0] + n[1] * q[1] + n[2] * q[2] for q in rel2]
        if max(proj1) <= min(proj2) or max(proj2) <= min(proj1):
            return True
    return False


# ---------------------------------------------------------------------------
# solid angles

@dataclass
class SolidAngle:
    """Solid angle at the apex of a tangency tetrahedron with three equal
    apex edges: Girard's theorem gives 3*(dihedral along an apex edge) - pi."""
    cos_dihedral: tuple            # element of Q(r)
    field: NumberField
    multiple_of_pi: Fraction       # exact value as q*pi, or None

    def enclosure(self, prec=96):
        pi = pi_enclosure(prec)
        if self.multiple_of_pi is not None:
            return pi.scale(self.multiple_of_pi)
        cos_iv = self.field.enclosure(self.cos_dihedral, prec)
        d = acos_enclosure(cos_iv, prec)
        return d.scale(3) - pi


def solid_angle_at_small(r):
    """Solid angle subtended at a small sphere's center by a tetrahedron to
    three mutually tangent large centers (apex edges 1+r, base edges 2).

    The apex face-angle cosine is c = 1 - 2/(1+r)^2; by symmetry the three
    dihedral angles along the apex edges all have cosine c/(1+c).
    """
    F = NumberField(r)
    one = F.one()
    one_r = F.add(one, F.gen())
    sq = F.mul(one_r, one_r)
    cos_face = F.sub(one, F.scalar(F.inv(sq), 2))
    if F.sign(F.sub(one, cos_face)) <= 0 or F.sign(F.add(one, cos_face)) <= 0:
        raise ValueError("degenerate apex tetrahedron at this radius")
    cos_dih = F.mul(cos_face, F.inv(F.add(one, cos_face)))
    multiple = None
    if F.is_zero(cos_dih):
        multiple = Fraction(1, 2)  # three right dihedral angles
    return SolidAngle(cos_dih, F, multiple)


def regular_tetrahedron_solid_angle():
    """Vertex solid angle of a regular tetrahedron: 3*arccos(1/3) - pi."""
    from .exactalg.algebraic import AlgebraicReal
    F = NumberField(AlgebraicReal.from_rational(1))
    return SolidAngle(F.from_rational(Fraction(1, 3)), F, None)


def omega_divides_4pi(omega, max_prec=1 << 14):
    """Interval decision of whether 4*pi / omega is a positive integer.

    Returns (True, k) exactly when the quotient is the integer k (decidable
    only for exact pi-multiples); (False, None) when an enclosure certifies
    the quotient lies strictly between consecutive integers.
    """
    if omega.multiple_of_pi is not None:
        q = Fraction(4) / omega.multiple_of_pi
        return (q.denominator == 1, int(q) if q.denominator == 1 else None)
    prec = 128
    while prec <= max_prec:
        four_pi = pi_enclosure(prec).scale(4)
        quotient = four_pi / omega.enclosure(prec)
        floor = int(quotient.lo)
        if quotient.lo > floor and quotient.hi < floor + 1:
            return (False, None)
        prec *= 2
    raise BisphereError("could not certify integrality either way")


# ---------------------------------------------------------------------------
# density

@dataclass
class PackingMetrics:
    density_factor: QF      # density = pi * density_factor, exactly
    density_interval: DyadicInterval
    counts: dict
    simplex_census: dict

    def density_expression(self):
        return f"pi * ({self.density_factor.pretty()})"

    def density_float(self):
        return float(self.density_interval.mid)


# (sqrt2 - 1)^3 = 5*sqrt2 - 7
_SMALL_VOLUME_FACTOR = QF(-7, 5)


def density(p, census=None):
    """Exact density: sum of sphere volumes over the cell volume."""
    n_large = len(p.large_indices())
    n_small = len(p.small_indices())
    vol_factor = QF(n_large) + _SMALL_VOLUME_FACTOR * n_small   # over 4pi/3
    q = vol_factor * QF(Fraction(4, 3)) / p.cell_volume()
    prec = 96
    iv = pi_enclosure(prec) * q.enclosure(prec)
    counts = {"large": n_large, "small": n_small}
    return PackingMetrics(q, iv, counts, census or {})


# ---------------------------------------------------------------------------
# shell classification inside a packing

def classify_shells(p):
    """Map each large motif sphere to the shape class of its neighbor shell."""
    out = {}
    for i in p.large_indices():
        xi, _ = p.motif[i]
        large_pts = []
        small = 0
        for (j, t, d2) in sphere_neighbors(p, i):
            kj = p.motif[j][1]
            if not _is_tangent(LARGE, kj, d2):
                continue
            if kj == SMALL:
                small += 1
                continue
            rel = _ivsub(_ivadd(p.motif[j][0], t), xi)
            large_pts.append(p.frame.point(rel))
        if len(large_pts) != 12 or small != 6:
            raise BisphereError(
                f"large sphere {i} has {len(large_pts)} large and {small} "
                "small contacts; expected 12 and 6")
        name = classify_points(large_pts)
        if name is None:
            raise BisphereError(f"shell of sphere {i} matches neither class")
        out[i] = name
    return out


# ---------------------------------------------------------------------------
# stacking recovery

def recover_stacking(p):
    """Read the stacking sequence back off a compact packing.

    Finds a ring of six coplanar tangent large spheres around a seed sphere,
    takes the ring plane as a layer plane, groups all large spheres into
    equally spaced layers along its normal, and classifies consecutive
    horizontal shifts into the three grid positions.  Composing with the
    builders reproduces the model up to isometry.
    """
    larges = p.large_indices()
    if not larges:
        raise BisphereError("no large spheres to recover from")
    seed = larges[0]
    x0 = p.motif[seed][0]
    rel = [_ivadd(_ivsub(p.motif[j][0], x0), t)
           for (j, t, d2) in sphere_neighbors(p, seed)
           if p.motif[j][1] == LARGE and d2 == _T2_LL]
    if len(rel) != 12:
        raise BisphereError("seed sphere is not in a close-packed environment")
    for plane in _ring_planes(p, rel):
        word = _read_layers(p, x0, plane)
        if word is not None:
            return StackingSequence(word)
    raise BisphereError("no layer structure found around the seed sphere")


def _ring_planes(p, rel):
    """Spanning pairs of the planes of coplanar tangent 6-rings around 0."""
    planes = []
    seen = set()
    for combo in itertools.combinations(range(len(rel)), 6):
        pts = [rel[i] for i in combo]
        span = None
        for i in range(6):
            for j in range(i + 1, 6):
                if _icross(pts[i], pts[j]) != (0, 0, 0):
                    span = (pts[i], pts[j])
                    break
            if span:
                break
        if span is None:
            continue
        if any(_idet(span[0], span[1], q) != 0 for q in pts):
            continue
        if not _is_hexagon(p, combo, pts):
            continue
        key = _primitive_normal(_icross(span[0], span[1]))
        if key not in seen:
            seen.add(key)
            planes.append(span)
    return planes


def _primitive_normal(n):
    g = gcd(gcd(abs(n[0]), abs(n[1])), abs(n[2]))
    n = tuple(x // g for x in n)
    return max(n, tuple(-x for x in n))


def _is_hexagon(p, combo, pts):
    adj = {v: [] for v in combo}
    for a in range(6):
        for b in range(a + 1, 6):
            if p.frame.dist2(_ivsub(pts[a], pts[b])) == _T2_LL:
                adj[combo[a]].append(combo[b])
                adj[combo[b]].append(combo[a])
    if any(len(v) != 2 for v in adj.values()):
        return False
    prev, cur, steps = None, combo[0], 0
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        prev, cur = cur, nxt
        steps += 1
        if cur == combo[0]:
            return steps == 6
        if steps > 6:
            return False


def _read_layers(p, x0, plane):
    """Decode letters along the normal of a candidate layer plane, or None."""
    p1, p2 = plane

    def T(v):
        return _idet(p1, p2, v)

    t_basis = [T(b) for b in p.basis]
    g = 0
    for t in t_basis:
        g = gcd(g, abs(t))
    if g == 0:
        return None
    larges = p.large_indices()
    t_vals = {i: T(_ivsub(p.motif[i][0], x0)) for i in larges}
    base = t_vals[larges[0]]
    residues = sorted({(t - base) % g for t in t_vals.values()})
    m = len(residues)
    if m < 2 or len(larges) % m:
        return None
    spacing = residues[1] if residues[0] == 0 else None
    if not spacing or g != m * spacing:
        return None
    if any(residues[k] != k * spacing for k in range(m)):
        return None

    kernel = _plane_sublattice(t_basis, p.basis)
    if kernel is None:
        return None
    vert = _lift_vector(t_basis, p.basis, g)

    # one representative per layer; every other sphere must sit on the same
    # translated grid
    reps = {}
    for i in larges:
        level = ((t_vals[i] - base) % g) // spacing
        reps.setdefault(level, p.motif[i][0])
    if len(reps) != m:
        return None
    for i in larges:
        level = ((t_vals[i] - base) % g) // spacing
        d = _ivsub(p.motif[i][0], reps[level])
        k, rem = divmod(T(d), g)
        if rem:
            return None
        if not _in_span(_ivsub(d, _ivscale(vert, k)), kernel):
            return None

    # consecutive-layer gap vectors, each normalized to T = spacing
    gaps = []
    for level in range(m):
        d = _ivsub(reps[(level + 1) % m], reps[level])
        k, rem = divmod(spacing - T(d), g)
        if rem:
            return None
        gaps.append(_ivadd(d, _ivscale(vert, k)))

    # the exact horizontal part of the first gap (T annihilates it); the
    # normal direction in frame coordinates is nu_i = c_i / w_i
    c = _icross(p1, p2)
    w = p.frame.weights
    nu = (Fraction(c[0]) / w[0], Fraction(c[1]) / w[1], Fraction(c[2]) / w[2])
    t_nu = sum(Fraction(ci) * ni for ci, ni in zip(c, nu))
    e = gaps[0]
    scale = Fraction(spacing) / t_nu
    h_e = tuple(Fraction(x) - scale * ni for x, ni in zip(e, nu))
    if _in_span(h_e, kernel):
        return None   # adjacent layers line up: not a close-packing axis
    if not _in_span(tuple(3 * x for x in h_e), kernel):
        return None   # the shift is not a third of a grid vector

    steps = []
    for d in gaps:
        diff = _ivsub(d, e)
        if _in_span(diff, kernel):
            steps.append(1)
        elif _in_span(tuple(Fraction(x) + 2 * h for x, h in zip(diff, h_e)), kernel):
            steps.append(-1)
        else:
            return None
    pos = 0
    word = []
    for s in steps:
        word.append(STACK_LETTERS[pos % 3])
        pos += s
    if pos % 3:
        return None   # the letters do not close up around the period
    return "".join(word)


def _plane_sublattice(t_basis, basis):
    """Basis of the saturated sublattice of the translation lattice lying in
    the plane (T = 0)."""
    t1, t2, t3 = t_basis
    if t1 == 0 and t2 == 0 and t3 == 0:
        return None
    coeff_vecs = _kernel_coeffs(t1, t2, t3)
    out = []
    for coeffs in coeff_vecs:
        v = (0, 0, 0)
        for cf, b in zip(coeffs, basis):
            v = _ivadd(v, _ivscale(b, cf))
        out.append(v)
    return out


def _kernel_coeffs(t1, t2, t3):
    """Basis of the saturated integer kernel of the row (t1, t2, t3)."""
    if t1 == 0 and t2 == 0:
        return [(1, 0, 0), (0, 1, 0)]
    g12 = gcd(abs(t1), abs(t2))
    k1 = (t2 // g12, -t1 // g12, 0)
    u, v = _bezout(t1, t2)
    g = gcd(g12, abs(t3))
    k2 = (-u * (t3 // g), -v * (t3 // g), g12 // g)
    return [k1, k2]


def _bezout(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def _lift_vector(t_basis, basis, g):
    """Integer lattice vector with T = +g."""
    t1, t2, t3 = t_basis
    g12 = gcd(abs(t1), abs(t2))
    if g12:
        u, v = _bezout(t1, t2)
        uu, vv = _bezout(g12, t3)
        coeffs = (u * uu, v * uu, vv)
    else:
        uu, vv = _bezout(0, t3)
        coeffs = (0, 0, vv)
    total = sum(t * cf for t, cf in zip(t_basis, coeffs))
    if total < 0:
        coeffs = tuple(-cf for cf in coeffs)
        total = -total
    assert total == g
    v = (0, 0, 0)
    for cf, b in zip(coeffs, basis):
        v = _ivadd(v, _ivscale(b, cf))
    return v


def _in_span(v, kernel):
    """Exact membership of a rational vector in the integer span of the
    two kernel generators."""
    k1, k2 = kernel
    for (i, j) in ((0, 1), (0, 2), (1, 2)):
        det = k1[i] * k2[j] - k1[j] * k2[i]
        if det:
            vi, vj = Fraction(v[i]), Fraction(v[j])
            alpha = (vi * k2[j] - vj * k2[i]) / det
            beta = (k1[i] * vj - k1[j] * vi) / det
            third = ({0, 1, 2} - {i, j}).pop()
            if alpha * k1[third] + beta * k2[third] != Fraction(v[third]):
                return False
            return alpha.denominator == 1 and beta.denominator == 1
    return False


# ---------------------------------------------------------------------------
# export

def packing_to_xyz(p, digits=12):
    """Extended XYZ-style text: decimal coordinates plus the exact field
    coordinates (4-tuples over 1, sqrt2, sqrt3, sqrt6) in comments."""
    lines = [str(len(p.motif)),
             f"cell_determinant={p.cell_determinant()} filled={p.filled} "
             f"stacking={p.stacking or '-'}"]
    for (coord, kind) in p.motif:
        pt = p.frame.point(coord)
        nums = " ".join(f"{float(x):.{digits}f}" for x in pt)
        exact = " ".join("(" + ",".join(str(q) for q in x.tuple()) + ")" for x in pt)
        radius = "1" if kind == LARGE else "sqrt2-1"
        lines.append(f"{kind} {nums} radius={radius} # exact {exact}")
    return "\n".join(lines) + "\n"


def tiling_to_off(p, digits=9):
    """OFF mesh of the tetrahedral tiling over one period."""
    classes = _tetra_classes(p)
    verts = []
    index = {}
    faces = []
    for tet in classes:
        ids = []
        for q in _tetra_points(p, tet):
            if q not in index:
                index[q] = len(verts)
                verts.append(q)
            ids.append(index[q])
        for tri in itertools.combinations(ids, 3):
            faces.append(tri)
    lines = ["OFF", f"{len(verts)} {len(faces)} 0"]
    for q in verts:
        pt = p.frame.point(q)
        lines.append(" ".join(f"{float(x):.{digits}f}" for x in pt))
    for tri in faces:
        lines.append("3 " + " ".join(str(v) for v in tri))
    return "\n".join(lines) + "\n"


def metrics_to_json(metrics):
    return json.dumps({
        "density_exact": metrics.density_expression(),
        "density_interval": [str(metrics.density_interval.lo),
                             str(metrics.density_interval.hi)],
        "density_float": metrics.density_float(),
        "counts": metrics.counts,
        "simplex_census": metrics.simplex_census,
    }, indent=2, sort_keys=True)
