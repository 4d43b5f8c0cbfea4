import itertools
from fractions import Fraction

import pytest

from bisphere.errors import FoldInconsistency
from bisphere.exactalg.quadfield import QF, dist2, vdot
from bisphere.necklace import NecklaceWord, certified_radius_by_word
from bisphere.shell import (CUBOCTAHEDRON, ORTHOBICUPOLA, ShellComplex,
                            complete_shells, cuboctahedron_points, embed_shell,
                            orthobicupola_points, shell_ring_property,
                            shell_to_json, shell_to_off)

W = NecklaceWord.from_string

ALLOWED_LARGE = {W("111r1r"), W("11r11r")}
ALLOWED_SMALL = {W("1111")}


@pytest.fixture(scope="module")
def shells():
    return complete_shells(ALLOWED_LARGE, ALLOWED_SMALL)


@pytest.fixture(scope="module")
def ratio():
    return certified_radius_by_word("1111")


@pytest.fixture(scope="module")
def embedded(shells, ratio):
    return [embed_shell(s, ratio) for s in shells]


def test_exactly_two_shells(shells):
    assert len(shells) == 2
    for s in shells:
        assert s.label_counts() == (12, 6)
        assert s.euler_characteristic() == 2


def test_links_recheck(shells):
    for s in shells:
        assert s.validate(ALLOWED_LARGE, ALLOWED_SMALL, kissing_bound=12)
        for v in range(s.vertex_count()):
            w = s.link_word(v)
            if s.labels[v] == "S":
                assert w == W("1111")
            else:
                assert w in ALLOWED_LARGE
        # no S-S edge anywhere
        for e in s.edges():
            a, b = sorted(e)
            assert not (s.labels[a] == "S" and s.labels[b] == "S")


def test_isomorph_freeness(shells):
    certs = [s.canonical_certificate() for s in shells]
    assert len(set(certs)) == len(certs)


def test_certificate_invariant_under_relabeling(shells):
    s = shells[0]
    n = s.vertex_count()
    perm = list(range(n))[::-1]
    labels = [None] * n
    for v in range(n):
        labels[perm[v]] = s.labels[v]
    faces = [frozenset(perm[v] for v in f) for f in s.faces]
    t = ShellComplex(labels, faces)
    assert t.canonical_certificate() == s.canonical_certificate()


def test_restricted_to_one_word_gives_one_shell(ratio):
    one = complete_shells({W("11r11r")}, ALLOWED_SMALL)
    assert len(one) == 1
    assert embed_shell(one[0], ratio).shape_class == CUBOCTAHEDRON


def test_empty_small_set_gives_no_shells():
    assert complete_shells(ALLOWED_LARGE, set()) == []


def test_shape_classes(embedded):
    assert sorted(e.shape_class for e in embedded) == [CUBOCTAHEDRON, ORTHOBICUPOLA]


def test_embedding_distances_exact(embedded):
    for emb in embedded:
        s = emb.complex
        pos = emb.coordinates
        edges = s.edges()
        for v in range(s.vertex_count()):
            want = QF(4) if s.labels[v] == "L" else QF(2)
            assert vdot(pos[v], pos[v]) == want
        for a, b in itertools.combinations(range(s.vertex_count()), 2):
            d2 = dist2(pos[a], pos[b])
            pair = {s.labels[a], s.labels[b]}
            if frozenset((a, b)) in edges:
                assert d2 == (QF(4) if pair == {"L"} else QF(2))
            else:
                floor = QF(12, -8) if pair == {"S"} else (QF(4) if pair == {"L"} else QF(2))
                assert (d2 - floor).sign() >= 0


def test_central_angles(embedded):
    # adjacent L-L central angle 60 deg (cos = 1/2), L-S 45 deg (cos = 1/sqrt2)
    for emb in embedded:
        s = emb.complex
        pos = emb.coordinates
        for e in s.edges():
            a, b = sorted(e)
            dot = vdot(pos[a], pos[b])
            pair = {s.labels[a], s.labels[b]}
            if pair == {"L"}:
                assert dot == QF(2)            # |u||v|cos = 2*2*(1/2)
            else:
                assert dot == QF(2)            # 2*sqrt2*(1/sqrt2) = 2
        # which is cos 60 and cos 45 after dividing the center distances
        # (both products happen to equal 2)


def test_ring_counts_truth(embedded):
    counts = {e.shape_class: len(shell_ring_property(e)) for e in embedded}
    # the orthobicupola has its one equatorial hexagon; the cuboctahedron's
    # twelve vertices split into four coplanar tangency hexagons
    assert counts[ORTHOBICUPOLA] == 1
    assert counts[CUBOCTAHEDRON] == 4


def test_rings_are_genuine(embedded):
    for emb in embedded:
        pos = emb.coordinates
        for ring in shell_ring_property(emb):
            assert len(ring) == 6
            for i in range(6):
                d2 = dist2(pos[ring[i]], pos[ring[(i + 1) % 6]])
                assert d2 == QF(4)


def _complex_from_points(large_pts, small_pts):
    """Independent construction: tangency graph of explicit coordinates."""
    from bisphere.exactalg.quadfield import dist2
    pts = [(p, "L") for p in large_pts] + [(p, "S") for p in small_pts]
    n = len(pts)
    def tangent(i, j):
        pair = {pts[i][1], pts[j][1]}
        want = QF(4) if pair == {"L"} else QF(2)
        return dist2(pts[i][0], pts[j][0]) == want
    faces = []
    for i in range(n):
        for j in range(i + 1, n):
            if not tangent(i, j):
                continue
            for k in range(j + 1, n):
                if tangent(i, k) and tangent(j, k):
                    faces.append((i, j, k))
    return ShellComplex([kind for _, kind in pts], faces)


def test_search_agrees_with_geometric_references(shells):
    """The two search results are exactly the complexes read off the two
    known coordinate models; the backtracker finds nothing else."""
    from bisphere.shell import orthobicupola_points
    from bisphere.exactalg.quadfield import vec
    s2 = QF.sqrt2()
    cub_small = [vec(s2, 0, 0), vec(-s2, 0, 0), vec(0, s2, 0),
                 vec(0, -s2, 0), vec(0, 0, s2), vec(0, 0, -s2)]
    cub = _complex_from_points(cuboctahedron_points(), cub_small)
    s3 = QF.sqrt3()
    h2 = QF.sqrt6(Fraction(1, 3))
    orth_small = []
    for (x, y) in [(QF(1), s3 * Fraction(-1, 3)), (QF(-1), s3 * Fraction(-1, 3)),
                   (QF(0), s3 * Fraction(2, 3))]:
        orth_small.append(vec(x, y, h2))
        orth_small.append(vec(x, y, -h2))
    orth = _complex_from_points(orthobicupola_points(), orth_small)
    reference_certs = {cub.canonical_certificate(), orth.canonical_certificate()}
    search_certs = {s.canonical_certificate() for s in shells}
    assert reference_certs == search_certs


def test_reference_point_sets():
    cub = cuboctahedron_points()
    orth = orthobicupola_points()
    assert len(cub) == len(orth) == 12
    for pts in (cub, orth):
        for p in pts:
            assert vdot(p, p) == QF(4)
    # cuboctahedron is centrally symmetric; the orthobicupola is not
    assert all(tuple(-c for c in p) in [tuple(q) for q in cub] for p in map(tuple, cub))


def test_export_formats(embedded, tmp_path):
    emb = embedded[0]
    off = shell_to_off(emb)
    assert off.startswith("OFF\n18 32 48\n")
    assert off.count("#") == 18
    js = shell_to_json(emb)
    import json
    data = json.loads(js)
    assert data["shape_class"] in (CUBOCTAHEDRON, ORTHOBICUPOLA)
    assert len(data["labels"]) == 18
    assert len(data["faces"]) == 32
    assert data["field_basis"] == ["1", "sqrt2", "sqrt3", "sqrt6"]


def test_node_budget_enforced():
    from bisphere.errors import BudgetExceeded
    with pytest.raises(BudgetExceeded):
        complete_shells(ALLOWED_LARGE, ALLOWED_SMALL, node_budget=3)


def test_unrealizable_complex_raises(ratio):
    # an octahedron with all-L labels is a valid triangulation but violates
    # the tangency system: fold closure must fail
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
             (5, 1, 2), (5, 2, 3), (5, 3, 4), (5, 4, 1)]
    bad = ShellComplex(["L"] * 6, faces)
    with pytest.raises(FoldInconsistency):
        embed_shell(bad, ratio)
