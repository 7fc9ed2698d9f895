import json
import math

import pytest

from unitshapes import cli
from unitshapes.curves import shape_from_dict


def invoke(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_single_family_json(capsys):
    code, out, _ = invoke(capsys, "catalog", "--family", "rectangle", "--r", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"family": "rectangle", "r": 1.0, "Pi": 4.0}


def test_catalog_table_csv(capsys):
    code, out, _ = invoke(capsys, "catalog", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,params,Pi"
    assert len(lines) >= 16


def test_catalog_degrees_flag(capsys):
    code, out, _ = invoke(capsys, "catalog", "--family", "rhombus", "--theta", "90",
                          "--degrees", "--format", "json")
    assert code == 0
    assert json.loads(out)["Pi"] == pytest.approx(4.0, rel=1e-12)


def test_minimize_triangle(capsys):
    code, out, _ = invoke(capsys, "minimize", "--family", "triangle")
    assert code == 0
    doc = json.loads(out)
    assert doc["argmin"][0] == pytest.approx(1.0, abs=1e-6)
    assert doc["argmin"][1] == pytest.approx(1.0, abs=1e-6)
    assert doc["min_value"] == pytest.approx(3.0 * math.sqrt(3.0), rel=1e-9)
    assert doc["converged"] is True


def test_minimize_ellipse_boundary(capsys):
    code, out, _ = invoke(capsys, "minimize", "--family", "ellipse")
    assert code == 0
    doc = json.loads(out)
    assert doc["converged"] is False
    assert doc["boundary_infimum"] == pytest.approx(math.pi, rel=1e-12)


def test_unitize_round_trip(capsys):
    code, out, _ = invoke(capsys, "unitize", "--family", "ellipse", "--r", "0.5",
                          "--scale", "3.0")
    assert code == 0
    doc = json.loads(out)
    shape = shape_from_dict(doc["unit_shape"])
    measure = doc["fundamental_measure"]
    assert shape.area() == pytest.approx(measure, rel=1e-12)
    assert shape.semiperimeter() == pytest.approx(measure, rel=1e-12)
    assert doc["tong_inradius_reciprocal"] == pytest.approx(1.0 / 3.0, rel=1e-9)


def test_unitize_from_file(tmp_path, capsys):
    from unitshapes.curves import make_circle

    path = tmp_path / "shape.json"
    path.write_text(make_circle(5.0).to_json())
    code, out, _ = invoke(capsys, "unitize", "--input", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["fundamental_measure"] == pytest.approx(math.pi, rel=1e-9)
    assert doc["tong_inradius_reciprocal"] == pytest.approx(0.2, rel=1e-12)


def test_scan_csv(capsys):
    code, out, _ = invoke(capsys, "scan", "--family", "ellipse", "--quantity", "a",
                          "--lo", "0.1", "--hi", "0.9", "--n", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "param,value"
    assert len(lines) == 6
    first = float(lines[1].split(",")[1])
    last = float(lines[-1].split(",")[1])
    assert 2.0 / math.pi < first < last < 1.0


def test_verify_suite_exit_zero(capsys):
    code, out, _ = invoke(capsys, "verify", "--suite", "isoperimetric", "--seed", "42")
    assert code == 0
    for line in out.strip().splitlines():
        doc = json.loads(line)
        assert doc["pass"] is True


def test_solids_csv_five_rows(capsys):
    code, out, _ = invoke(capsys, "solids", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "solid,fundamental_measure"
    assert len(lines) == 6
    names = [line.split(",")[0] for line in lines[1:]]
    assert names == ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"]
    cube_value = float(lines[2].split(",")[1])
    assert cube_value == pytest.approx(8.0, rel=1e-9)


def test_deterministic_output(capsys):
    _, first, _ = invoke(capsys, "verify", "--suite", "mgon", "--seed", "42")
    _, second, _ = invoke(capsys, "verify", "--suite", "mgon", "--seed", "42")
    assert first == second
    _, third, _ = invoke(capsys, "verify", "--suite", "mgon", "--seed", "43")
    assert first != third


def test_catalog_deterministic(capsys):
    _, first, _ = invoke(capsys, "catalog", "--format", "json")
    _, second, _ = invoke(capsys, "catalog", "--format", "json")
    assert first == second


def test_verify_tol_override(capsys):
    # An absurdly tight tolerance must flip sampled equality checks to failure
    # and drive the exit code to 1.
    code, out, _ = invoke(capsys, "verify", "--suite", "mgon", "--seed", "42",
                          "--tol", "1e-30")
    assert code == 1
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert any(not doc["pass"] for doc in lines)


def test_usage_error_exit_two(capsys):
    code, _, err = invoke(capsys, "catalog", "--family", "heptagram")
    assert code == 2
    assert "error" in err.lower()


def test_domain_error_exit_two(capsys):
    code, _, err = invoke(capsys, "catalog", "--family", "rectangle", "--r", "-1")
    assert code == 2
    assert "positive" in err


def test_missing_param_exit_two(capsys):
    code, _, err = invoke(capsys, "catalog", "--family", "rectangle")
    assert code == 2
    assert "--r" in err


def test_unitize_without_input_exit_two(capsys):
    code, _, err = invoke(capsys, "unitize")
    assert code == 2
    assert "stdin" in err


def test_pretty_formats_render(capsys):
    for argv in (
        ["catalog"],
        ["minimize", "--family", "rhombus", "--format", "pretty"],
        ["scan", "--family", "rhombus", "--quantity", "h", "--lo", "0.1", "--hi", "3.0",
         "--n", "51", "--format", "pretty"],
        ["verify", "--suite", "rational-circle", "--format", "pretty"],
        ["solids"],
    ):
        code, out, _ = invoke(capsys, *argv)
        assert code == 0
        assert out.strip()
