import json

import pytest

from bisphere.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(scope="module")
def radii_json_run():
    import io
    import contextlib
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(["radii", "--format", "json"])
    return code, buf.getvalue()


def test_radii_json_contract(radii_json_run):
    code, out = radii_json_run
    assert code == 0
    data = json.loads(out)
    assert data["word_count"] == 18
    assert data["prefilter_count"] == 16
    assert data["certified_count"] == 10
    assert data["reference_match"] is True
    assert data["factor_mode"] == "irreducible"
    rows = data["certified"]
    assert [r["word"] for r in rows] == [
        "11111", "1111r", "111rr", "11r1r", "11rrr",
        "1111", "111r", "111", "1r1rr", "11rr"]
    # schema fields of the per-candidate records
    cand = data["candidates"][0]
    assert set(cand) == {"word", "context", "minpoly", "root_interval",
                         "status", "certification_precision_bits"}


def test_radii_csv_has_header_and_ten_rows(capsys):
    code, out, _ = run(capsys, "radii", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 11
    assert lines[0].startswith("word,")


def test_radii_deterministic(capsys):
    code1, out1, _ = run(capsys, "radii", "--format", "json")
    code2, out2, _ = run(capsys, "radii", "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2


def test_necklaces_large(capsys):
    code, out, _ = run(capsys, "necklaces", "large", "--r-word", "1111",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["certified_triples"] == [[2, 4, 0]]
    assert data["realized_words"]["(2, 4, 0)"] == ["111r1r", "11r11r"]
    assert data["triple_bounds"] == [5, 6, 7]


def test_necklaces_large_elsewhere_empty(capsys):
    code, out, _ = run(capsys, "necklaces", "large", "--r-word", "11111",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["certified_triples"] == []


def test_necklaces_small(capsys):
    code, out, _ = run(capsys, "necklaces", "small", "--r-word", "11rr",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["certified_triples"] == [[1, 2, 1]]
    assert data["realized_words"]["(1, 2, 1)"] == ["11rr"]


def test_necklaces_minpoly_selector(capsys):
    code, out, _ = run(capsys, "necklaces", "large", "--minpoly=-1,2,1",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["certified_triples"] == [[2, 4, 0]]


def test_necklaces_unknown_word_usage_error(capsys):
    code, out, err = run(capsys, "necklaces", "large", "--r-word", "11r")
    assert code == 2


def test_shells_command(capsys, tmp_path):
    code, out, _ = run(capsys, "shells", "--format", "json",
                       "--export", str(tmp_path))
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2
    assert sorted(s["shape_class"] for s in data["shells"]) == [
        "cuboctahedron", "triangular_orthobicupola"]
    assert all(s["large_vertices"] == 12 and s["small_vertices"] == 6
               for s in data["shells"])
    offs = list(tmp_path.glob("shell_*.off"))
    assert len(offs) == 2


def test_pack_filled(capsys):
    code, out, _ = run(capsys, "pack", "--seq", "ABC", "--fill",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["compact"] is True
    assert abs(data["density_float"] - 0.793105) < 1e-5
    assert data["roundtrip_ok"] is True


def test_pack_unfilled_not_compact(capsys):
    code, out, _ = run(capsys, "pack", "--seq", "ABC", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["compact"] is False
    assert abs(data["density_float"] - 0.740480) < 1e-5


def test_pack_bad_sequence_usage_error(capsys):
    code, out, err = run(capsys, "pack", "--seq", "AA")
    assert code == 2


def test_pack_exports(capsys, tmp_path):
    code, out, _ = run(capsys, "pack", "--seq", "AB", "--fill",
                       "--export", str(tmp_path))
    assert code == 0
    assert (tmp_path / "packing_AB_filled.xyz").exists()
    assert (tmp_path / "tiling_AB_filled.off").exists()
    assert (tmp_path / "density.png").exists()
    assert (tmp_path / "pack_AB_filled.txt").exists()


def test_radii_export_writes_figure_and_report(capsys, tmp_path):
    code, out, _ = run(capsys, "radii", "--format", "csv",
                       "--export", str(tmp_path))
    assert code == 0
    assert (tmp_path / "radii.csv").exists()
    png = tmp_path / "radii.png"
    assert png.exists() and png.stat().st_size > 1000


def test_precision_bits_floor(capsys):
    code, out, err = run(capsys, "radii", "--precision-bits", "32")
    assert code == 2
