import json
import subprocess
import sys

import pytest

from string_torsion.cli import run

from conftest import GOLDEN


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("k,name", [("1", "table_L1_7.txt"), ("2", "table_L2_7.txt")])
def test_table_golden(capsys, k, name):
    code, out, _ = call(capsys, "table", "--p", "7", "--k", k)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_table_json_is_deterministic(capsys):
    _, a, _ = call(capsys, "table", "--k", "2", "--format", "json")
    _, b, _ = call(capsys, "table", "--k", "2", "--format", "json")
    assert a == b
    data = json.loads(a)
    assert data["r"] == 4 and len(data["rows"]) == 7


def test_compare(capsys):
    code, out, _ = call(capsys, "compare", "--k1", "1", "--k2", "2")
    assert code == 0
    assert out.splitlines()[-1] == "verdict: DISTINGUISHED"
    data = json.loads(call(capsys, "compare", "--k1", "1", "--k2", "2", "--format", "json")[1])
    assert [s["zero_set"] for s in data["spaces"]] == [[0, 1, 6], [0]]


def test_torsion(capsys):
    code, out, _ = call(capsys, "torsion", "--k1", "1", "--k2", "2", "--a", "2")
    assert code == 0
    assert "tau      = t + t^2 + t^3 - t^5 - t^6" in out
    assert "tau^-1   = t^4 - t^5 + t^6" in out
    assert "(6 + 5 t + 6 t^2 + t^3 + 2 t^4 + t^5 + 2 t^6) dt" in out


def test_trace_of_element(capsys):
    code, out, _ = call(capsys, "trace", "--element", "t^4 - t^5 + t^6", "--format", "json")
    assert code == 0
    # dlog of the inverse is -dlog tau; tau has (2, 6, 5, 6, 1, 2, 1) in the dt/t basis
    assert json.loads(out)["dlog"] == [(-c) % 7 for c in (2, 6, 5, 6, 1, 2, 1)]


def test_trace_needs_input(capsys):
    code, _, err = call(capsys, "trace")
    assert code == 2 and "usage" in err


def test_trace_of_non_unit(capsys):
    code, _, err = call(capsys, "trace", "--element", "1 + t + t^2 + t^3 + t^4 + t^5 + t^6")
    assert code == 1 and "check failed" in err


def test_check_transform(capsys):
    code, out, _ = call(
        capsys, "check-transform", "--k1", "1", "--k2", "2", "--a", "2", "--l", "1", "--m", "0"
    )
    assert code == 0
    assert "residual (raw, RHS - LHS)     = 1 t^2 dt/t" in out
    assert out.splitlines()[-1] == "verdict: PASS"


def test_check_transform_raw_fails(capsys):
    code, out, _ = call(
        capsys, "check-transform", "--k1", "1", "--k2", "2", "--a", "2",
        "--l", "1", "--m", "0", "--context", "raw",
    )
    assert code == 1 and "verdict: FAIL" in out


def test_check_transform_missing_datum(capsys):
    code, _, err = call(
        capsys, "check-transform", "--k1", "1", "--k2", "2", "--a", "2", "--l", "2", "--m", "1"
    )
    assert code == 2 and "STRING_TORSION_FIMAGE" in err


def test_check_transform_fimage_file(capsys, tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps([dict(k1=1, k2=2, p=7, a=2, l=2, m=1, l_image=4, m_image=-1)]))
    code, out, _ = call(
        capsys, "check-transform", "--k1", "1", "--k2", "2", "--a", "2",
        "--l", "2", "--m", "1", "--context", "mod-delta-k", "--fimage", str(path),
    )
    assert code == 0 and "rho_{4,-1}" in out


def test_coproduct(capsys):
    code, out, _ = call(capsys, "coproduct", "--k", "1", "--l", "1", "--m", "0")
    assert code == 0 and out.strip().endswith("= 0")


def test_oracle(capsys):
    code, out, _ = call(capsys, "oracle", "--k", "2", "--l", "2", "--m", "1")
    assert code == 0 and "verdict: EQUAL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--k", "7"],
        ["table", "--k", "1", "--p", "9"],
        ["coproduct", "--k", "1", "--l", "2", "--m", "4"],
        ["coproduct", "--k", "1", "--l", "0", "--m", "1"],
    ],
)
def test_bad_parameters(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and "error:" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "string_torsion", "table", "--k", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "table_L1_7.txt").read_text()
