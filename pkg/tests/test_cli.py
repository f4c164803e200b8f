import json
import subprocess
import sys

import numpy as np
import pytest

from qproj.catalog import catalog
from qproj.classicality import closed_form_oracle
from qproj.cli import main
from qproj.errors import ParseError, SchemaError
from qproj.io import dump_measurement_set, fmt_complex, fmt_real, parse_matrix, parse_measurement_set, parse_pvector

from .conftest import CATALOG

Z_MEASUREMENT = '{"dim":2,"operators":[[[[1,0],[0,0]],[[0,0],[0,0]]],[[[0,0],[0,0]],[[0,0],[1,0]]]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_z_measurement():
    mset = parse_measurement_set(Z_MEASUREMENT)
    assert mset.size == 2 and mset.labels == ("k0", "k1")
    np.testing.assert_array_equal(mset.operators[1], [[0, 0], [0, 1]])


@pytest.mark.parametrize("name", CATALOG)
def test_dump_round_trip(name):
    mset = catalog(name)
    back = parse_measurement_set(dump_measurement_set(mset))
    np.testing.assert_array_equal(back.operators, mset.operators)
    assert np.max(np.abs(back.metric - mset.metric)) <= 1e-15
    assert back.labels == mset.labels
    assert dump_measurement_set(back) == dump_measurement_set(mset)


@pytest.mark.parametrize(
    "text, path",
    [
        ('{"dim":2,"operators":[[[[1,0]]]]}', "operators[0]"),
        ('{"dim":2,"operators":[[[[1,0],[0,0]],[[0,0]]]]}', "operators[0][1]"),
        ('{"dim":2,"operators":[[[[1,0],[0,0]],[[0,0],[0]]]]}', "operators[0][1][1]"),
        ('{"dim":2,"operators":[]}', "operators"),
        ('{"dim":0,"operators":[[[[1,0]]]]}', "dim"),
        ('{"dim":1,"operators":[[[[true,0]]]]}', "operators[0][0][0][0]"),
        ('{"dim":1,"operators":[[[[1,0]]]],"labels":["a","b"]}', "labels"),
        ("[1, 2]", "$"),
    ],
)
def test_schema_errors(text, path):
    with pytest.raises(SchemaError) as err:
        parse_measurement_set(text)
    assert err.value.path == path


def test_parse_errors():
    with pytest.raises(ParseError) as err:
        parse_measurement_set('{"dim": 2,\n "operators": [}')
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_measurement_set('{"dim":1,"operators":[[[[NaN,0]]]]}')


def test_state_and_pvector_files():
    m = parse_matrix('[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]')
    np.testing.assert_array_equal(m, 0.5 * np.eye(2))
    np.testing.assert_array_equal(parse_matrix('{"matrix": [[[1,0]]]}'), [[1]])
    entries, sigma = parse_pvector('{"sigma": 0.5, "entries": [[1, 0], [0, -1]]}')
    np.testing.assert_array_equal(entries, [1, -1j])
    assert sigma == 0.5
    assert parse_pvector("[[1, 2]]")[1] is None


def test_number_format():
    assert fmt_real(1 / 3) == "0.333333333333"
    assert fmt_real(-0.0) == "0"
    assert fmt_complex(0.5 - 0.25j) == "0.5-0.25i"
    assert fmt_complex(complex(1, -1e-20)) == "1-1e-20i"
    assert fmt_complex(0j) == "0+0i"


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and out.split() == list(CATALOG)


def test_classify_tetrahedron(capsys):
    code, out, _ = run(capsys, "classify", "--catalog", "tetrahedron", "--sigma", "1", "--bloch", "0,0,-1")
    doc = json.loads(out)
    assert code == 0 and doc["classical"] is False
    assert doc["maxmin"] == -1.0


def test_classify_with_files(tmp_path, capsys):
    set_file = tmp_path / "z.json"
    set_file.write_text(Z_MEASUREMENT)
    state = tmp_path / "rho.json"
    state.write_text("[[[0.5,0],[0.5,0]],[[0.5,0],[0.5,0]]]")
    code, out, _ = run(capsys, "classify", "--set", str(set_file), "--state", str(state))
    assert code == 0 and json.loads(out)["classical"] is True


def test_analyze_square(capsys):
    code, out, _ = run(capsys, "analyze", "--catalog", "square")
    doc = json.loads(out)
    assert code == 0
    assert doc["rank"] == 3 and doc["incomplete"] and doc["overcomplete"]
    assert len(doc["nullspace"]) == 1
    vec = [complex(s.replace("i", "j")) for s in doc["nullspace"][0]]
    np.testing.assert_allclose(vec, [0.5, 0.5, -0.5, -0.5], atol=1e-12)


def test_scan_csv(tmp_path, capsys):
    out_file = tmp_path / "scan.csv"
    code, out, _ = run(capsys, "scan", "--catalog", "octahedron", "--sigma", "0.5", "--step", "0.1", "--out", str(out_file))
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == "x,y,z,classical,maxmin"
    assert lines[-1] == "# classical_fraction=1"
    assert float(lines[-1].split("=")[1]) == 1.0
    assert out.strip() == lines[-1]


@pytest.mark.parametrize("name", CATALOG)
def test_scan_rows_obey_closed_form(name, capsys):
    code, out, _ = run(capsys, "scan", "--catalog", name, "--sigma", "1", "--step", "0.2")
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:-1]]
    assert rows
    for x, y, z, flag, t in rows:
        if abs(float(t)) > 1e-7:
            assert closed_form_oracle(name, 1, (float(x), float(y), float(z))) == (flag == "1")


def test_scan_is_deterministic(capsys):
    outputs = [run(capsys, "scan", "--catalog", "square", "--sigma", "0.75")[1] for _ in range(2)]
    assert outputs[0] == outputs[1]


def test_kd_sum_line(capsys):
    code, out, _ = run(capsys, "kd", "--pair", "fourier", "--dim", "2", "--bloch", "0.3,0.4,0.2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "k,l,P" and len(lines) == 6
    total = complex(lines[-1].split("=")[1].replace("i", "j"))
    assert abs(total - 1) < 1e-10


def test_kd_needs_state(capsys):
    code, _, err = run(capsys, "kd")
    assert code == 2 and "--bloch" in err


def test_reconstruct(tmp_path, capsys):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"sigma": 1, "entries": [[1.5, 0], [0, 0], [0, 0]]}))
    code, out, _ = run(capsys, "reconstruct", "--catalog", "trine", "--p", str(p))
    doc = json.loads(out)
    m = np.array([[complex(s.replace("i", "j")) for s in row] for row in doc["matrix"]])
    np.testing.assert_allclose(m, 0.5 * np.ones((2, 2)), atol=1e-12)
    assert code == 0


def test_exit_codes(tmp_path, capsys):
    assert run(capsys, "classify", "--catalog", "cube", "--bloch", "0,0,0")[0] == 2
    assert run(capsys, "classify", "--catalog", "square", "--bloch", "1,1,1")[0] == 1
    assert run(capsys, "classify", "--catalog", "square", "--bloch", "1,1")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim":2,"operators":[[[[1,0]]]]}')
    code, _, err = run(capsys, "analyze", "--set", str(bad))
    assert code == 2 and "operators[0]" in err
    assert run(capsys, "analyze", "--set", str(tmp_path / "missing.json"))[0] == 2
    state = tmp_path / "bad_state.json"
    state.write_text("[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]")
    code, _, err = run(capsys, "classify", "--catalog", "square", "--state", str(state))
    assert code == 1 and "NotPSD" in err
    assert run(capsys, "scan", "--catalog", "square", "--step", "0.7")[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qproj", "classify", "--catalog", "trine", "--bloch=-0.6,0,0"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["classical"] is False
