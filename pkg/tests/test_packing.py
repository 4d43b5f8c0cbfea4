import math
from fractions import Fraction

import pytest

from bisphere.errors import BisphereError
from bisphere.exactalg.poly import RationalPoly
from bisphere.exactalg.algebraic import isolate_real_roots
from bisphere.exactalg.quadfield import QF
from bisphere.packing import (LAYER_FRAME, PackingModel,
                              StackingSequence, build_close_packing,
                              canonical_stacking, classify_shells,
                              contact_graph, conventional_fcc_cell, density,
                              enumerate_stackings, fill_octahedral_holes,
                              metrics_to_json, omega_divides_4pi,
                              packing_to_xyz, recover_stacking,
                              regular_tetrahedron_solid_angle,
                              solid_angle_at_small, tiling_to_off,
                              verify_compact)


def sqrt2_minus_1():
    (r,) = isolate_real_roots(RationalPoly([-1, 2, 1]), (0, 1))
    return r


# -- sequences ---------------------------------------------------------------

def test_sequence_validation():
    assert str(StackingSequence("abc")) == "ABC"
    with pytest.raises(ValueError):
        StackingSequence("AA")
    with pytest.raises(ValueError):
        StackingSequence("ABCA")   # wraps onto itself
    with pytest.raises(ValueError):
        StackingSequence("A")
    with pytest.raises(ValueError):
        StackingSequence("ABX")


def test_canonical_stacking_symmetries():
    assert canonical_stacking("ABC") == canonical_stacking("ACB")
    assert canonical_stacking("ABAC") == canonical_stacking("ABCB")
    assert canonical_stacking("AB") == canonical_stacking("BC")
    assert StackingSequence("ABAB").equivalent("ACAC")


def test_enumerate_stackings_against_brute_force():
    import itertools
    raw = []
    for n in range(2, 7):
        for w in itertools.product("ABC", repeat=n):
            w = "".join(w)
            if all(w[t] != w[(t + 1) % n] for t in range(n)):
                raw.append(w)
    assert len(raw) == sum(2**n + 2 * (-1) ** n for n in range(2, 7))
    classes = enumerate_stackings(6)
    assert sorted({canonical_stacking(w) for w in raw}) == sorted(classes)
    assert len(classes) <= 86


# -- construction ------------------------------------------------------------

def test_close_packing_contact_numbers():
    for word in ("ABC", "AB", "ABAC"):
        p = build_close_packing(word)
        g = contact_graph(p)
        assert g.degrees_by_kind() == {"L": {12}}


def test_fill_produces_rock_salt_counts():
    f = fill_octahedral_holes(build_close_packing("ABC"))
    assert len(f.small_indices()) == len(f.large_indices()) == 3
    g = contact_graph(f)
    assert g.degrees_by_kind() == {"L": {18}, "S": {6}}


def test_fill_rejects_non_close_packing():
    f = fill_octahedral_holes(build_close_packing("ABC"))
    with pytest.raises(BisphereError):
        fill_octahedral_holes(f)
    doctored = PackingModel(LAYER_FRAME, ((6, 0, 0), (3, 3, 0), (0, 0, 12)),
                            (((0, 0, 0), "L"), ((0, 0, 6), "L")), stacking="AB")
    with pytest.raises(BisphereError):
        fill_octahedral_holes(doctored)


def test_small_spheres_on_octahedron_vertices():
    """Each small sphere touches 6 large ones centered on a regular
    octahedron: all pairwise distances among them are 2 or 2*sqrt2."""
    from bisphere.packing import sphere_neighbors, _ivadd, _ivsub
    f = fill_octahedral_holes(build_close_packing("ABC"))
    i = f.small_indices()[0]
    xi = f.motif[i][0]
    tangent = [_ivadd(f.motif[j][0], t) for (j, t, d2) in sphere_neighbors(f, i)
               if d2 == Fraction(2)]
    assert len(tangent) == 6
    dists = sorted(f.frame.dist2(_ivsub(a, b))
                   for k, a in enumerate(tangent) for b in tangent[k + 1:])
    assert dists == [4] * 12 + [8] * 3


# -- compactness -------------------------------------------------------------

def test_filled_fcc_is_compact_conventional_census():
    conv = conventional_fcc_cell(filled=True)
    v = verify_compact(conv)
    assert v.compact
    assert v.simplex_census == {"LLLL": 8, "LLLS": 32}
    # 8 * (2 sqrt2 / 3) + 32 * (sqrt2 / 3) == 16 sqrt2 == cell volume
    assert v.tetra_volume == QF.sqrt2(16)
    assert v.cell_volume == QF.sqrt2(16)


def test_unfilled_fcc_volume_deficit():
    conv = conventional_fcc_cell(filled=False)
    v = verify_compact(conv)
    assert not v.compact
    assert v.deficit == QF.sqrt2(Fraction(32, 3))   # 4 octahedra of 8*sqrt2/3


def test_verdict_cell_choice_independent():
    layer = verify_compact(fill_octahedral_holes(build_close_packing("ABC")))
    conv = verify_compact(conventional_fcc_cell(filled=True))
    assert layer.compact and conv.compact
    # per-large-sphere census agrees between the two cells
    assert {k: Fraction(n, 3) for k, n in layer.simplex_census.items()} == \
        {k: Fraction(n, 4) for k, n in conv.simplex_census.items()}


def test_filled_hcp_and_mixed_compact():
    for word in ("AB", "ABAC"):
        v = verify_compact(fill_octahedral_holes(build_close_packing(word)))
        assert v.compact, word


# -- solid angles -------------------------------------------------------------

def test_solid_angle_exact_right_angle():
    omega = solid_angle_at_small(sqrt2_minus_1())
    assert omega.multiple_of_pi == Fraction(1, 2)
    iv = omega.enclosure(96)
    assert float(iv.lo) <= math.pi / 2 <= float(iv.hi)
    ok, k = omega_divides_4pi(omega)
    assert ok and k == 8


def test_solid_angle_generic_radius():
    (r,) = isolate_real_roots(RationalPoly([1, -6, 1]), (0, 1))  # 3 - 2 sqrt2
    omega = solid_angle_at_small(r)
    assert omega.multiple_of_pi is None
    iv = omega.enclosure(96)
    # oracle: cos_face = 1 - 2/(1+r)^2 = -0.45742..., dihedral = acos(c/(1+c))
    c = 1 - 2 / (1 + 0.17157287525381) ** 2
    want = 3 * math.acos(c / (1 + c)) - math.pi
    assert abs(float(iv.mid) - want) < 1e-12


def test_regular_tetrahedron_angle_does_not_divide_4pi():
    omega = regular_tetrahedron_solid_angle()
    iv = omega.enclosure(96)
    want = 3 * math.acos(1 / 3) - math.pi
    assert abs(float(iv.mid) - want) < 1e-12          # ~0.551286
    ok, k = omega_divides_4pi(omega)
    assert not ok and k is None


# -- density -------------------------------------------------------------------

def test_density_values():
    filled = density(fill_octahedral_holes(build_close_packing("ABC")))
    assert filled.density_factor == QF(Fraction(5, 3), -1)   # 5/3 - sqrt2
    assert abs(filled.density_float() - 0.793105) < 1e-5
    unfilled = density(build_close_packing("ABC"))
    assert unfilled.density_factor == QF(0, Fraction(1, 6))  # sqrt2/6
    assert abs(unfilled.density_float() - 0.740480) < 1e-5
    # the improvement factor is exactly 5*sqrt2 - 6
    ratio = filled.density_factor / unfilled.density_factor
    assert ratio == QF(-6, 5)


def test_density_sequence_independent():
    want = QF(Fraction(5, 3), -1)
    for word in ("AB", "ABC", "ABCACB"):
        m = density(fill_octahedral_holes(build_close_packing(word)))
        assert m.density_factor == want


# -- classification and recovery -----------------------------------------------

def test_classify_shells_fcc_hcp_mixed():
    f = fill_octahedral_holes(build_close_packing("ABC"))
    assert set(classify_shells(f).values()) == {"cuboctahedron"}
    h = fill_octahedral_holes(build_close_packing("AB"))
    assert set(classify_shells(h).values()) == {"triangular_orthobicupola"}
    m = fill_octahedral_holes(build_close_packing("ABAC"))
    assert sorted(set(classify_shells(m).values())) == [
        "cuboctahedron", "triangular_orthobicupola"]


def test_recover_stacking_round_trips():
    for word in ("ABC", "AB", "ABCB", "ABABC"):
        f = fill_octahedral_holes(build_close_packing(word))
        rec = recover_stacking(f)
        assert StackingSequence(word).equivalent(rec), (word, str(rec))


# -- exports --------------------------------------------------------------------

def test_xyz_export():
    f = fill_octahedral_holes(build_close_packing("AB"))
    text = packing_to_xyz(f)
    lines = text.strip().split("\n")
    assert lines[0] == "4"
    assert "stacking=AB" in lines[1]
    assert sum(1 for ln in lines[2:] if ln.startswith("L ")) == 2
    assert sum(1 for ln in lines[2:] if ln.startswith("S ")) == 2
    assert all("# exact" in ln for ln in lines[2:])


def test_tiling_off_export():
    f = fill_octahedral_holes(build_close_packing("AB"))
    off = tiling_to_off(f)
    head = off.split("\n")[1].split()
    assert int(head[0]) > 0 and int(head[1]) > 0


def test_metrics_json():
    import json
    f = fill_octahedral_holes(build_close_packing("ABC"))
    v = verify_compact(f)
    m = density(f, census=v.simplex_census)
    data = json.loads(metrics_to_json(m))
    assert data["counts"] == {"large": 3, "small": 3}
    assert data["simplex_census"] == {"LLLL": 6, "LLLS": 24}
    assert "sqrt(2)" in data["density_exact"]
    lo, hi = Fraction(data["density_interval"][0]), Fraction(data["density_interval"][1])
    assert lo <= hi
    assert abs(float((lo + hi) / 2) - 0.7931048178) < 1e-9
