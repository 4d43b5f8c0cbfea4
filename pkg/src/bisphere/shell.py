"""Shells: the neighborhood of a large sphere as a labeled triangulation.

The shell of a sphere is the set of spheres tangent to it, viewed as a
spherical triangulation whose vertices carry the neighbor's size (L or S).
Around a central large sphere at ratio sqrt(2)-1, the ring of common
neighbors of the center and any L vertex must be an allowed large necklace,
and of any S vertex an allowed skew necklace; an exhaustive backtracking
search shows exactly two completions exist.  Each is then embedded with
exact coordinates in Q(sqrt2, sqrt3) and classified by its shape.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, FoldInconsistency
from .exactalg.quadfield import (QF, dist2, qf_sqrt, vadd, vcross, vdot,
                                 vec, vscale)
from .necklace import NecklaceWord

CUBOCTAHEDRON = "cuboctahedron"
ORTHOBICUPOLA = "triangular_orthobicupola"


# ---------------------------------------------------------------------------
# the complex

class ShellComplex:
    """Vertex-labeled triangulation of the neighborhood sphere.

    Vertices are integers; labels[v] is 'L' or 'S'.  The center itself is a
    large sphere and is not a vertex.
    """

    def __init__(self, labels, faces):
        self.labels = list(labels)
        self.faces = frozenset(frozenset(f) for f in faces)
        self.center_label = "L"

    # -- structure queries -------------------------------------------------
    def edges(self):
        out = set()
        for f in self.faces:
            a, b, c = sorted(f)
            out.update({frozenset((a, b)), frozenset((a, c)), frozenset((b, c))})
        return out

    def vertex_count(self):
        return len(self.labels)

    def label_counts(self):
        return (self.labels.count("L"), self.labels.count("S"))

    def neighbors(self, v):
        out = set()
        for f in self.faces:
            if v in f:
                out.update(f - {v})
        return out

    def link_cycle(self, v):
        """Neighbors of v in cyclic order, or None if the link is not a
        single closed cycle."""
        adj = {}
        for f in self.faces:
            if v in f:
                x, y = sorted(f - {v})
                adj.setdefault(x, []).append(y)
                adj.setdefault(y, []).append(x)
        if not adj or any(len(ns) != 2 for ns in adj.values()):
            return None
        start = min(adj)
        cycle = [start]
        prev, cur = None, start
        while True:
            a, b = adj[cur]
            nxt = b if a == prev else a
            if nxt == start:
                break
            cycle.append(nxt)
            prev, cur = cur, nxt
            if len(cycle) > len(adj):
                return None
        if len(cycle) != len(adj):
            return None
        return cycle

    def link_word(self, v):
        cyc = self.link_cycle(v)
        if cyc is None:
            return None
        return NecklaceWord(self.labels[u] for u in cyc)

    def is_complete(self):
        return all(self.link_cycle(v) is not None for v in range(len(self.labels)))

    def euler_characteristic(self):
        return len(self.labels) - len(self.edges()) + len(self.faces)

    def validate(self, allowed_large, allowed_small, kissing_bound=12):
        """Re-check every invariant directly from the face set."""
        if self.euler_characteristic() != 2:
            return False
        edge_faces = {}
        for f in self.faces:
            a, b, c = sorted(f)
            for e in (frozenset((a, b)), frozenset((a, c)), frozenset((b, c))):
                edge_faces[e] = edge_faces.get(e, 0) + 1
        if any(n != 2 for n in edge_faces.values()):
            return False
        if self.labels.count("L") > kissing_bound:
            return False
        for v in range(len(self.labels)):
            w = self.link_word(v)
            if w is None:
                return False
            allowed = allowed_large if self.labels[v] == "L" else allowed_small
            if w not in allowed:
                return False
        return True

    # -- canonical form -----------------------------------------------------
    def _oriented_faces(self):
        """Consistent orientation of all faces, by propagation."""
        faces = [tuple(sorted(f)) for f in self.faces]
        face_of_edge = {}
        for f in faces:
            a, b, c = f
            for e in ((a, b), (a, c), (b, c)):
                face_of_edge.setdefault(frozenset(e), []).append(f)
        oriented = {faces[0]: faces[0]}
        queue = [faces[0]]
        while queue:
            f = queue.pop()
            a, b, c = oriented[f]
            for e in ((a, b), (b, c), (c, a)):
                for g in face_of_edge[frozenset(e)]:
                    if g in oriented or g == f:
                        continue
                    (x,) = set(g) - set(e)
                    # shared edge traversed oppositely in the neighbor
                    oriented[g] = (e[1], e[0], x)
                    queue.append(g)
        return list(oriented.values())

    def _rotation(self):
        """succ[(v, w)] = next neighbor after w in the rotation around v."""
        succ = {}
        for (a, b, c) in self._oriented_faces():
            succ[(a, b)] = c
            succ[(b, c)] = a
            succ[(c, a)] = b
        return succ

    def canonical_certificate(self):
        """Label-aware canonical encoding, minimized over all starting
        directed edges and both orientations."""
        succ = self._rotation()
        pred = {(v, w2): w1 for (v, w1), w2 in succ.items()}
        best = None
        for (v0, w0) in succ:
            for table in (succ, pred):
                code = self._encode(v0, w0, table)
                if best is None or code < best:
                    best = code
        return best

    def _encode(self, v0, w0, table):
        # pure-integer code: -2/-3 mark the vertex label, -1 ends its ring
        order = {v0: 0}
        code = []
        queue = [(v0, w0)]
        while queue:
            v, first = queue.pop(0)
            ring = [first]
            w = first
            while True:
                w = table[(v, w)]
                if w == first:
                    break
                ring.append(w)
            code.append(-2 if self.labels[v] == "L" else -3)
            for w in ring:
                if w not in order:
                    order[w] = len(order)
                    queue.append((w, v))
                code.append(order[w])
            code.append(-1)
        return tuple(code)


# ---------------------------------------------------------------------------
# exhaustive completion search

class _SearchState:
    __slots__ = ("labels", "faces", "edge_count", "nbrs")

    def __init__(self, labels, faces, edge_count, nbrs):
        self.labels = labels
        self.faces = faces
        self.edge_count = edge_count
        self.nbrs = nbrs

    def copy(self):
        return _SearchState(list(self.labels), set(self.faces),
                            dict(self.edge_count), {v: set(s) for v, s in self.nbrs.items()})


def _limits(words):
    """(max length, max L neighbors, max S neighbors) over a word set."""
    if not words:
        return (0, 0, 0)
    return (max(len(w) for w in words),
            max(sum(1 for c in w.letters if c == "L") for w in words),
            max(sum(1 for c in w.letters if c == "S") for w in words))


def _fragment_fits(fragment, words):
    """True if the label path `fragment` embeds in some cyclic word."""
    for w in words:
        n = len(w)
        if len(fragment) > n:
            continue
        doubled = w.letters + w.letters
        rev = tuple(reversed(doubled))
        for s in (doubled, rev):
            for i in range(n):
                if tuple(s[i:i + len(fragment)]) == tuple(fragment):
                    return True
    return False


def _link_fragments(state, v):
    """Maximal paths/cycle of the partial link of v.

    Returns ('cycle', [vertices]) or ('paths', [[vertices], ...]) or None if
    the link is branched (invalid)."""
    adj = {}
    for f in state.faces:
        if v in f:
            x, y = sorted(f - {v})
            adj.setdefault(x, []).append(y)
            adj.setdefault(y, []).append(x)
    for ns in adj.values():
        if len(ns) > 2:
            return None
    ends = sorted(x for x, ns in adj.items() if len(ns) == 1)
    if not adj:
        return ("paths", [])
    if not ends:
        cyc = []
        start = min(adj)
        prev, cur = None, start
        while True:
            cyc.append(cur)
            a = adj[cur]
            nxt = a[0] if a[0] != prev else (a[1] if len(a) > 1 else None)
            if nxt is None:
                return None
            prev, cur = cur, nxt
            if cur == start:
                break
            if len(cyc) > len(adj):
                return None
        if len(cyc) != len(adj):
            return None  # several disjoint cycles: not a disc
        return ("cycle", cyc)
    paths = []
    seen = set()
    for e in ends:
        if e in seen:
            continue
        path = [e]
        seen.add(e)
        prev, cur = None, e
        while True:
            ns = [x for x in adj[cur] if x != prev]
            if not ns:
                break
            prev, cur = cur, ns[0]
            if cur in seen:
                return None
            path.append(cur)
            seen.add(cur)
        paths.append(path)
    if len(seen) != len(adj):
        return None  # a cycle component plus paths: not a disc
    return ("paths", paths)


def _vertex_ok(state, v, allowed_large, allowed_small, limits):
    """Partial-link feasibility of one vertex."""
    label = state.labels[v]
    words = allowed_large if label == "L" else allowed_small
    max_len, max_l, max_s = limits[label]
    nbrs = state.nbrs.get(v, set())
    if len(nbrs) > max_len:
        return False
    n_l = sum(1 for u in nbrs if state.labels[u] == "L")
    if n_l > max_l or len(nbrs) - n_l > max_s:
        return False
    frag = _link_fragments(state, v)
    if frag is None:
        return False
    kind, parts = frag
    if kind == "cycle":
        if len(parts) != len(nbrs):
            return False
        return NecklaceWord(state.labels[u] for u in parts) in words
    for path in parts:
        if not _fragment_fits([state.labels[u] for u in path], words):
            return False
    return True


def _is_complete_vertex(state, v):
    frag = _link_fragments(state, v)
    if frag is None:
        return False
    kind, parts = frag
    return kind == "cycle" and len(parts) == len(state.nbrs.get(v, ()))


def complete_shells(allowed_large, allowed_small, kissing_bound=12,
                    node_budget=200000):
    """All complete shells (up to isomorphism) grown from a small sphere
    surrounded by large ones, under the given link-word constraints.

    Exhaustive backtracking: every branch fills the unique next face slot at
    the most constrained incomplete vertex, so the enumeration is complete.
    """
    allowed_large = set(allowed_large)
    allowed_small = set(allowed_small)
    limits = {"L": _limits(allowed_large), "S": _limits(allowed_small)}
    ss_edges_allowed = any("S" in w.letters for w in allowed_small)

    results = {}
    budget = [node_budget]

    def seed_states():
        for w in sorted(allowed_small):
            n = len(w)
            labels = ["S"] + [w.letters[t] for t in range(n)]
            faces = set()
            for t in range(n):
                faces.add(frozenset((0, 1 + t, 1 + (t + 1) % n)))
            edge_count = {}
            nbrs = {}
            st = _SearchState(labels, faces, edge_count, nbrs)
            for f in faces:
                for e in _face_edges(f):
                    edge_count[e] = edge_count.get(e, 0) + 1
                for u in f:
                    nbrs.setdefault(u, set()).update(f - {u})
            yield st

    def recurse(state):
        if budget[0] <= 0:
            raise BudgetExceeded("shell completion", node_budget)
        budget[0] -= 1
        incomplete = [v for v in range(len(state.labels))
                      if not _is_complete_vertex(state, v)]
        if not incomplete:
            shell = ShellComplex(state.labels, state.faces)
            if shell.validate(allowed_large, allowed_small, kissing_bound):
                results.setdefault(shell.canonical_certificate(), shell)
            return
        # most constrained first: fewest remaining link slots
        def slots(v):
            return limits[state.labels[v]][0] - len(state.nbrs.get(v, ()))
        v = min(incomplete, key=lambda u: (slots(u), u))
        boundary = sorted(e for e, n in state.edge_count.items()
                          if n == 1 and v in e)
        if not boundary:
            return  # link closed but vertex invalid, or non-disc: dead branch
        e = boundary[0]
        (x,) = set(e) - {v}
        for y in _candidate_thirds(state, v, x, kissing_bound, ss_edges_allowed, limits):
            nxt = state.copy()
            if y == -1:
                nxt.labels.append("L")
                y = len(nxt.labels) - 1
            elif y == -2:
                nxt.labels.append("S")
                y = len(nxt.labels) - 1
            _add_face(nxt, frozenset((v, x, y)))
            if _addition_valid(nxt, (v, x, y), allowed_large, allowed_small, limits):
                recurse(nxt)

    def _candidate_thirds(state, v, x, bound, ss_ok, limits):
        out = []
        for y in range(len(state.labels)):
            if y in (v, x):
                continue
            f = frozenset((v, x, y))
            if f in state.faces:
                continue
            if state.edge_count.get(frozenset((v, y)), 0) >= 2:
                continue
            if state.edge_count.get(frozenset((x, y)), 0) >= 2:
                continue
            if not ss_ok:
                ly = state.labels[y]
                if ly == "S" and (state.labels[v] == "S" or state.labels[x] == "S"):
                    continue
            out.append(y)
        if state.labels.count("L") < bound:
            out.append(-1)  # new L vertex (the S-S rule never blocks an L)
        if ss_ok or (state.labels[v] != "S" and state.labels[x] != "S"):
            out.append(-2)  # new S vertex
        return out

    try:
        for st in seed_states():
            recurse(st)
    except RecursionError:
        raise BudgetExceeded("shell completion recursion", node_budget)
    return [results[k] for k in sorted(results)]


def _face_edges(f):
    a, b, c = sorted(f)
    return (frozenset((a, b)), frozenset((a, c)), frozenset((b, c)))


def _add_face(state, f):
    state.faces.add(f)
    for e in _face_edges(f):
        state.edge_count[e] = state.edge_count.get(e, 0) + 1
    for u in f:
        state.nbrs.setdefault(u, set()).update(f - {u})


def _addition_valid(state, touched, allowed_large, allowed_small, limits):
    for u in touched:
        if not _vertex_ok(state, u, allowed_large, allowed_small, limits):
            return False
    return True


# ---------------------------------------------------------------------------
# exact embedding

SQRT2 = QF.sqrt2()

# squared distance from the center: large neighbors at 2, small at 1+r = sqrt2
_CENTER_D2 = {"L": QF(4), "S": QF(2)}
# squared tangency distances between neighbors
_PAIR_D2 = {("L", "L"): QF(4), ("L", "S"): QF(2), ("S", "L"): QF(2)}


@dataclass
class EmbeddedShell:
    complex: ShellComplex
    coordinates: dict     # vertex -> exact 3-vector over Q(sqrt2, sqrt3)
    shape_class: str


def _pair_target(la, lb):
    if (la, lb) not in _PAIR_D2:
        raise FoldInconsistency(f"unexpected tangent pair {la}-{lb}")
    return _PAIR_D2[(la, lb)]


def embed_shell(shell, r):
    """Exact coordinates for a complete shell at ratio sqrt(2)-1.

    Places a first face and folds across shared edges; every fold solves the
    three distance constraints in Q(sqrt2, sqrt3).  Closure is then verified
    exactly: center distances, all tangencies, and no overlapping pair.
    """
    from .exactalg.poly import RationalPoly
    if r.minpoly != RationalPoly.from_int_list([-1, 2, 1]):
        raise ValueError("shell embedding is defined at the ratio sqrt(2)-1")
    if not shell.is_complete():
        raise ValueError("cannot embed an incomplete shell")
    labels = shell.labels
    faces = sorted(tuple(sorted(f)) for f in shell.faces)
    pos = {}
    f0 = faces[0]
    _place_first_face(shell, f0, pos)
    # fold across edges, breadth first
    placed_faces = {frozenset(f0)}
    frontier = [f0]
    face_of_edge = {}
    for f in faces:
        for e in _face_edges(frozenset(f)):
            face_of_edge.setdefault(e, []).append(f)
    while frontier:
        f = frontier.pop(0)
        fs = frozenset(f)
        third = {e: next(iter(fs - e)) for e in _face_edges(fs)}
        for e in _face_edges(fs):
            for g in face_of_edge[e]:
                gs = frozenset(g)
                if gs in placed_faces:
                    continue
                (x,) = gs - e
                if x not in pos:
                    u, v = sorted(e)
                    _fold_vertex(shell, pos, u, v, third[e], x)
                placed_faces.add(gs)
                frontier.append(g)
    _verify_embedding(shell, pos)
    return EmbeddedShell(shell, pos, _classify(shell, pos))


def _place_first_face(shell, f0, pos):
    labels = shell.labels
    a, b, c = f0
    da2, db2, dc2 = (_CENTER_D2[labels[v]] for v in f0)
    eab2 = _pair_target(labels[a], labels[b])
    eac2 = _pair_target(labels[a], labels[c])
    ebc2 = _pair_target(labels[b], labels[c])
    ra = qf_sqrt(da2)
    if ra is None:
        raise FoldInconsistency(f"center distance of vertex {a} not in the field")
    pos[a] = vec(ra, QF(0), QF(0))
    xb = (da2 + db2 - eab2) / (2 * ra)
    yb2 = db2 - xb * xb
    yb = qf_sqrt(yb2)
    if yb is None:
        raise FoldInconsistency(f"first face fold leaves the field at vertex {b}")
    pos[b] = vec(xb, yb, QF(0))
    xc = (da2 + dc2 - eac2) / (2 * ra)
    gbc = (db2 + dc2 - ebc2) * Fraction(1, 2)
    yc = (gbc - xb * xc) / yb
    zc2 = dc2 - xc * xc - yc * yc
    zc = qf_sqrt(zc2)
    if zc is None:
        raise FoldInconsistency(f"first face fold leaves the field at vertex {c}")
    pos[c] = vec(xc, yc, zc)


def _fold_vertex(shell, pos, u, v, w, x):
    """Place x across edge (u,v) from the already-placed w."""
    labels = shell.labels
    pu, pv, pw = pos[u], pos[v], pos[w]
    d2 = _CENTER_D2[labels[x]]
    a = (vdot(pu, pu) + d2 - _pair_target(labels[u], labels[x])) * Fraction(1, 2)
    b = (vdot(pv, pv) + d2 - _pair_target(labels[v], labels[x])) * Fraction(1, 2)
    g11, g12, g22 = vdot(pu, pu), vdot(pu, pv), vdot(pv, pv)
    det = g11 * g22 - g12 * g12
    if det.is_zero():
        raise FoldInconsistency(f"edge ({u},{v}) is degenerate")
    alpha = (a * g22 - b * g12) / det
    beta = (b * g11 - a * g12) / det
    par = vadd(vscale(pu, alpha), vscale(pv, beta))
    n = vcross(pu, pv)
    n2 = vdot(n, n)
    gamma2 = (d2 - vdot(par, par)) / n2
    if gamma2.sign() < 0:
        raise FoldInconsistency(f"vertex {x} has no real position across ({u},{v})")
    gamma = qf_sqrt(gamma2)
    if gamma is None:
        raise FoldInconsistency(f"vertex {x} leaves Q(sqrt2,sqrt3) across ({u},{v})")
    side_w = vdot(pw, n)
    if side_w.is_zero():
        raise FoldInconsistency(f"fold across ({u},{v}) from coplanar {w}")
    if side_w.sign() > 0:
        gamma = -gamma
    pos[x] = vadd(par, vscale(n, gamma))


def _verify_embedding(shell, pos):
    labels = shell.labels
    edges = shell.edges()
    n = len(labels)
    for v in range(n):
        if vdot(pos[v], pos[v]) != _CENTER_D2[labels[v]]:
            raise FoldInconsistency(f"vertex {v} not at its center distance")
    for a in range(n):
        for b in range(a + 1, n):
            d2 = dist2(pos[a], pos[b])
            if frozenset((a, b)) in edges:
                if d2 != _pair_target(labels[a], labels[b]):
                    raise FoldInconsistency(f"edge ({a},{b}) not at tangency")
            else:
                # non-adjacent spheres must not overlap: distance >= radius sum
                la, lb = labels[a], labels[b]
                if la == lb == "S":
                    # (2(sqrt2-1))^2 = 12 - 8*sqrt2
                    min2 = QF(12, -8, 0, 0)
                else:
                    min2 = _PAIR_D2.get((la, lb), QF(4))
                if (d2 - min2).sign() < 0:
                    raise FoldInconsistency(f"spheres {a},{b} overlap")


# -- shape classification ------------------------------------------------------

def cuboctahedron_points():
    s = SQRT2
    pts = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for si in (1, -1):
            for sj in (1, -1):
                p = [QF(0), QF(0), QF(0)]
                p[i] = s * si
                p[j] = s * sj
                pts.append(tuple(p))
    return pts


def orthobicupola_points():
    s3 = QF.sqrt3()
    h = QF.sqrt6(Fraction(2, 3))
    ring = [vec(2, 0, 0), vec(-2, 0, 0),
            vec(1, s3, 0), vec(-1, s3, 0), vec(1, -s3, 0), vec(-1, -s3, 0)]
    top_xy = [(QF(1), s3 * Fraction(1, 3)), (QF(-1), s3 * Fraction(1, 3)),
              (QF(0), s3 * Fraction(-2, 3))]
    pts = list(ring)
    for (x, y) in top_xy:
        pts.append(vec(x, y, h))
        pts.append(vec(x, y, -h))
    return pts


def _distance_multiset(points):
    out = {}
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d2 = dist2(points[i], points[j]).tuple()
            out[d2] = out.get(d2, 0) + 1
    return out


_REFERENCE_MULTISETS = None


def _reference_multisets():
    global _REFERENCE_MULTISETS
    if _REFERENCE_MULTISETS is None:
        _REFERENCE_MULTISETS = {
            CUBOCTAHEDRON: _distance_multiset(cuboctahedron_points()),
            ORTHOBICUPOLA: _distance_multiset(orthobicupola_points()),
        }
    return _REFERENCE_MULTISETS


def _classify(shell, pos):
    large = [pos[v] for v in range(len(shell.labels)) if shell.labels[v] == "L"]
    ms = _distance_multiset(large)
    for name, ref in _reference_multisets().items():
        if ms == ref:
            return name
    raise FoldInconsistency("large-vertex distance multiset matches no known shape")


def classify_points(points):
    """Match a recentered 12-point large-neighbor set against the two shapes."""
    ms = _distance_multiset(points)
    for name, ref in _reference_multisets().items():
        if ms == ref:
            return name
    return None


# -- coplanar rings -------------------------------------------------------------

def shell_ring_property(embedded):
    """All rings of six large vertices lying in a plane through the center,
    consecutive ring members tangent."""
    import itertools as it
    shell = embedded.complex
    large = [v for v in range(len(shell.labels)) if shell.labels[v] == "L"]
    pos = embedded.coordinates
    rings = []
    for combo in it.combinations(large, 6):
        pts = [pos[v] for v in combo]
        if not _coplanar_with_origin(pts):
            continue
        cycle = _hexagon_cycle(combo, pts)
        if cycle is not None:
            rings.append(cycle)
    return rings


def _coplanar_with_origin(pts):
    base = None
    n = None
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            c = vcross(pts[i], pts[j])
            if not (c[0].is_zero() and c[1].is_zero() and c[2].is_zero()):
                n = c
                break
        if n is not None:
            break
    if n is None:
        return False
    return all(vdot(n, p).is_zero() for p in pts)


def _hexagon_cycle(combo, pts):
    adj = {v: [] for v in combo}
    for i in range(6):
        for j in range(i + 1, 6):
            if dist2(pts[i], pts[j]) == QF(4):
                adj[combo[i]].append(combo[j])
                adj[combo[j]].append(combo[i])
    if any(len(ns) != 2 for ns in adj.values()):
        return None
    start = min(combo)
    cyc = [start]
    prev, cur = None, start
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        cyc.append(nxt)
        prev, cur = cur, nxt
        if len(cyc) > 6:
            return None
    return tuple(cyc) if len(cyc) == 6 else None


# ---------------------------------------------------------------------------
# export

def shell_to_off(embedded, precision=12):
    """OFF mesh text; vertex labels ride along as comments."""
    shell = embedded.complex
    pos = embedded.coordinates
    n = len(shell.labels)
    faces = sorted(tuple(sorted(f)) for f in shell.faces)
    lines = ["OFF", f"{n} {len(faces)} {len(shell.edges())}"]
    for v in range(n):
        x, y, z = pos[v]
        coords = " ".join(f"{float(c):.{precision}f}" for c in (x, y, z))
        lines.append(f"{coords}  # {shell.labels[v]}")
    for f in faces:
        lines.append("3 " + " ".join(str(v) for v in f))
    return "\n".join(lines) + "\n"


def shell_to_json(embedded):
    shell = embedded.complex
    pos = embedded.coordinates
    return json.dumps({
        "shape_class": embedded.shape_class,
        "labels": list(shell.labels),
        "faces": sorted(sorted(f) for f in shell.faces),
        "field_basis": ["1", "sqrt2", "sqrt3", "sqrt6"],
        "coordinates": {
            str(v): [[str(q) for q in c.tuple()] for c in pos[v]]
            for v in range(len(shell.labels))
        },
    }, indent=2, sort_keys=True)
