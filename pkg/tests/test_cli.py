"""Command-line behaviour: CSV/JSON/SVG output, exit codes, determinism,
and cross-invocation consistency."""

import json
import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exphermite import CurveDocument, dumps_document, loads_document, unit_circle
from exphermite.cli import main, parse_omega0

SVG_NS = "{http://www.w3.org/2000/svg}"


def write_circle(tmp_path, m=8, name="circle.json"):
    doc = CurveDocument.from_curve(unit_circle(m))
    path = tmp_path / name
    path.write_text(dumps_document(doc))
    return path


def write_cusp(tmp_path):
    curve = unit_circle(8)
    tangents = curve.tangents.copy()
    tangents[0] = 0.0
    doc = CurveDocument(1, 8, curve.points, tangents)
    path = tmp_path / "cusp.json"
    path.write_text(dumps_document(doc))
    return path


def test_parse_omega0_forms():
    assert parse_omega0("3pi/4") == pytest.approx(3 * math.pi / 4)
    assert parse_omega0("pi") == pytest.approx(math.pi)
    assert parse_omega0("pi/2") == pytest.approx(math.pi / 2)
    assert parse_omega0("2.356") == 2.356
    assert parse_omega0("1.5pi/2") == pytest.approx(0.75 * math.pi)


def test_basis_csv(tmp_path, capsys):
    code = main(
        ["basis", "--omega0", "2.356", "--which", "1", "--range", "-1", "1",
         "--samples", "5"]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "x,value"
    assert len(lines) == 6
    middle = lines[3].split(",")
    assert float(middle[0]) == 0.0
    assert float(middle[1]) == 1.0


def test_basis_deriv_at_zero(capsys):
    code = main(
        ["basis", "--omega0", "3pi/4", "--which", "2", "--deriv",
         "--range", "0", "1", "--samples", "3"]
    )
    assert code == 0
    rows = capsys.readouterr().out.strip().split("\n")[1:]
    assert float(rows[0].split(",")[1]) == pytest.approx(1.0, abs=1e-13)


def test_basis_domain_error_exit_code(capsys):
    assert main(["basis", "--omega0", "4.0", "--which", "1"]) == 3
    err = capsys.readouterr().err
    assert "pi" in err


def test_bad_flags_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["basis", "--omega0", "notanumber"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["basis"])
    assert info.value.code == 2


def test_subdivide_vector_levels(tmp_path, capsys):
    path = write_circle(tmp_path)
    assert main(["subdivide", str(path), "--levels", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["M"] == 8 * 2**3
    pts = np.array(payload["points"])
    assert len(pts) == 64
    assert np.abs(np.linalg.norm(pts, axis=1) - 1.0).max() < 1e-9


def test_subdivide_zero_levels_echoes_data(tmp_path, capsys):
    path = write_circle(tmp_path)
    assert main(["subdivide", str(path), "--levels", "0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    original = json.loads(path.read_text())
    assert payload == original


def test_subdivide_output_reingests(tmp_path, capsys):
    # refined output is itself a valid document; one more level on it lands
    # on the same points as two direct levels (interpolatory across calls)
    path = write_circle(tmp_path)
    out1 = tmp_path / "level1.json"
    assert main(["subdivide", str(path), "--levels", "1", "--out", str(out1)]) == 0
    assert main(["subdivide", str(out1), "--levels", "1"]) == 0
    once_more = json.loads(capsys.readouterr().out)
    assert main(["subdivide", str(path), "--levels", "2"]) == 0
    direct = json.loads(capsys.readouterr().out)
    a = np.array(once_more["points"])
    b = np.array(direct["points"])
    assert np.abs(a - b).max() < 1e-12


def test_subdivide_scalar_matches_vector(tmp_path, capsys):
    # the two schemes are conjugate: averaging each control pair recovers
    # the vector values, and the pair separation encodes the slopes
    from exphermite import Frequency, conversion_ratio

    path = write_circle(tmp_path)
    assert main(["subdivide", str(path), "--levels", "2", "--scheme", "scalar"]) == 0
    scalar = json.loads(capsys.readouterr().out)
    assert scalar["scheme"] == "scalar"
    assert main(["subdivide", str(path), "--levels", "2", "--scheme", "vector"]) == 0
    vector = json.loads(capsys.readouterr().out)

    level = scalar["level"]
    h = 2.0 ** (-level)
    local = Frequency(2 * math.pi / 8 * h)
    ctrl = np.array(scalar["control_points"])
    values = np.array(vector["points"])
    derivs = np.array(vector["tangents"]) / h  # document stores h-scaled slopes
    assert len(ctrl) == 2 * len(values)
    assert np.abs(0.5 * (ctrl[0::2] + ctrl[1::2]) - values).max() < 1e-11
    offset = conversion_ratio(local) * h
    slopes = (ctrl[1::2] - ctrl[0::2]) / (2.0 * offset)
    assert np.abs(slopes - derivs).max() < 1e-9


def test_subdivide_malformed_json_exit_four(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SystemExit) as info:
        main(["subdivide", str(bad), "--levels", "1"])
    assert info.value.code == 4
    missing = tmp_path / "missing.json"
    missing.write_text('{"version": 1}')
    with pytest.raises(SystemExit) as info:
        main(["subdivide", str(missing), "--levels", "1"])
    assert info.value.code == 4


def test_subdivide_invariant_violation_exit_three(tmp_path):
    wrong = tmp_path / "wrong.json"
    wrong.write_text(
        json.dumps(
            {
                "version": 1,
                "M": 5,
                "omega0_mode": "auto",
                "points": [[0.0, 0.0]] * 4,
                "tangents": [[0.0, 0.0]] * 4,
            }
        )
    )
    assert main(["subdivide", str(wrong), "--levels", "1"]) == 3


def test_render_svg_structure(tmp_path):
    path = write_circle(tmp_path)
    out = tmp_path / "circle.svg"
    assert main(["render", str(path), "--out", str(out)]) == 0
    root = ET.fromstring(out.read_text())
    assert root.tag == f"{SVG_NS}svg"
    assert root.get("version") == "1.1"
    paths = root.findall(f"{SVG_NS}path")
    assert len(paths) == 1
    d = paths[0].get("d")
    assert d.startswith("M ") and d.endswith(" Z")
    coords = np.array(
        [list(map(float, tok.split(","))) for tok in d[2:-2].split(" L ")]
    )
    # margin is 5% of the 1000-unit viewport on the larger extent
    assert coords[:, 0].min() == pytest.approx(50.0, abs=1.0)
    assert coords[:, 0].max() == pytest.approx(950.0, abs=1.0)
    assert coords[:, 1].min() == pytest.approx(50.0, abs=1.0)
    assert coords[:, 1].max() == pytest.approx(950.0, abs=1.0)


def test_render_handles_adds_markers(tmp_path):
    path = write_circle(tmp_path)
    out = tmp_path / "handles.svg"
    assert main(["render", str(path), "--handles", "--out", str(out)]) == 0
    root = ET.fromstring(out.read_text())
    markers = [
        el for el in root.findall(f"{SVG_NS}path") if el.get("class") == "ctrl"
    ]
    lines = root.findall(f"{SVG_NS}line")
    assert len(markers) == 8
    assert len(lines) == 8


def test_render_cusp_smoke(tmp_path):
    path = write_cusp(tmp_path)
    out = tmp_path / "cusp.svg"
    assert main(["render", str(path), "--out", str(out)]) == 0
    assert out.read_text().startswith("<?xml")


def test_basis_and_subdivide_byte_stable(tmp_path, capsys):
    args = ["basis", "--omega0", "1.7", "--which", "2", "--samples", "41"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    path = write_circle(tmp_path)
    args = ["subdivide", str(path), "--levels", "2"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first


def test_render_deterministic_bytes(tmp_path):
    for name in ("circle", "cusp"):
        path = write_circle(tmp_path) if name == "circle" else write_cusp(tmp_path)
        first = tmp_path / f"{name}1.svg"
        second = tmp_path / f"{name}2.svg"
        assert main(["render", str(path), "--out", str(first)]) == 0
        assert main(["render", str(path), "--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()


def test_render_unwritable_exit_five(tmp_path):
    path = write_circle(tmp_path)
    with pytest.raises(SystemExit) as info:
        main(["render", str(path), "--out", str(tmp_path / "no/such/dir/x.svg")])
    assert info.value.code == 5


def test_verify_suites_pass(capsys):
    for suite in ("riesz", "reproduction", "masks", "gram"):
        assert main(["verify", "--suite", suite, "--omega0", "2.356"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out


def test_verify_reports_values(capsys):
    assert main(["verify", "--suite", "riesz", "--omega0", "1.0"]) == 0
    out = capsys.readouterr().out
    assert "alpha" in out
    assert "value=" in out and "threshold=" in out


def test_document_round_trip_is_lossless(tmp_path):
    doc = CurveDocument.from_curve(unit_circle(7))
    text = dumps_document(doc)
    again = loads_document(text)
    assert np.array_equal(again.points, doc.points)
    assert np.array_equal(again.tangents, doc.tangents)
    assert dumps_document(again) == text


@settings(max_examples=60, deadline=None)
@given(
    rows=st.lists(
        st.lists(
            st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False),
            min_size=2, max_size=2,
        ),
        min_size=6, max_size=6,
    )
)
def test_document_serialization_survives_arbitrary_doubles(rows):
    pts = np.array(rows)
    doc = CurveDocument(1, 3, pts[:3], pts[3:])
    text = dumps_document(doc)
    again = loads_document(text)
    # 17 significant digits keep every double value exact (zero sign aside)
    assert np.array_equal(np.asarray(again.points), np.asarray(doc.points))
    assert np.array_equal(np.asarray(again.tangents), np.asarray(doc.tangents))
    assert dumps_document(again) == text
