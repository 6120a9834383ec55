import csv
import io
import json

import pytest

from uncertainty_bounds import cli
from uncertainty_bounds.core import SIGMA_X, SIGMA_Y, make_state
from uncertainty_bounds.experiments.serialize import encode_instance
from uncertainty_bounds.experiments.sweeps import SweepResult
from uncertainty_bounds.multi import WeightVector


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fig1_csv(capsys):
    code, out, _ = run(capsys, "fig1", "--grid-points", "101", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["abs_a", "sov", "lower", "upper"]
    assert len(rows) == 102
    for r in (rows[1], rows[-1]):
        assert r[1] == r[2] == r[3]


def test_fig1_json(capsys):
    code, out, _ = run(capsys, "fig1", "--grid-points", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["axis"] == "abs_a" and len(doc["columns"]["sov"]) == 3


def test_fig2_csv(capsys):
    code, out, _ = run(capsys, "fig2", "--grid-points", "9", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["theta", "sov", "lb", "ub", "fb", "pb", "tb1", "tbm", "tb2"]
    assert len(rows) == 10


def test_fig2_theta_range(capsys):
    code, out, _ = run(capsys, "fig2", "--grid-points", "2", "--theta-range", "0", "6.283185307179586")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[-1][0] == "6.28318530718"


def test_csv_precision(capsys):
    _, out, _ = run(capsys, "fig1", "--grid-points", "2")
    value = list(csv.reader(io.StringIO(out)))[1][1]
    assert len(value.replace(".", "").lstrip("0")) <= 12


def test_verify_summary(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "42", "--instances", "50")
    doc = json.loads(out)
    assert code == 0
    assert doc["instances"] == 50 and doc["failures"] == 0
    assert 0 <= doc["max_residual"] < 1e-10


def test_random_suite_detailed(capsys):
    code, out, _ = run(capsys, "random-suite", "--seed", "3", "--instances", "10")
    doc = json.loads(out)
    assert code == 0
    assert {"mixed_lift", "schrodinger_le_product", "theorem2_sandwich"} <= set(doc["checks"])


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--instances", "5", "--format", "csv")
    assert code == 0 and out.startswith("check,count,failures,max_residual")


def test_compare_stdin(capsys, monkeypatch):
    doc = encode_instance(make_state(ket=[1, 0]), [SIGMA_X, SIGMA_Y], WeightVector((1, 1)),
                          params={"a": 0, "b": 1, "m": 0.3, "n": 0.1})
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(doc)))
    code, out, _ = run(capsys, "compare")
    rep = json.loads(out)
    assert code == 0
    assert rep["bounds"]["mp"] == 2 and rep["sov"] == 2 and rep["ok"]


def test_compare_file_csv(capsys, tmp_path):
    doc = encode_instance(make_state(ket=[1, 0]), [SIGMA_X, SIGMA_Y])
    p = tmp_path / "inst.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "compare", "--input", str(p), "--format", "csv")
    assert code == 0 and out.startswith("quantity,value")


@pytest.mark.parametrize("text", ["{not json", json.dumps({"state": {"ket": [1, 1]}, "observables": []})])
def test_compare_bad_input(capsys, monkeypatch, text):
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, _, err = run(capsys, "compare")
    assert code == 1 and "error" in err


def test_compare_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "compare", "--input", str(tmp_path / "nope.json"))
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["fig1", "--grid-points", "1"],
    ["fig2", "--theta-range", "2", "1"],
    ["verify", "--tol", "sandwich=-1"],
    ["verify", "--tol", "bogus=1e-3"],
    ["verify", "--instances", "0"],
    ["nonsense"],
])
def test_config_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_invariant_violation_exit_code(capsys, monkeypatch):
    fake = SweepResult([0.0, 0.5, 1.0], {"sov": [1.0, 1.0, 1.0], "lower": [1.0, 1.5, 1.0],
                                          "upper": [1.0, 2.0, 1.0]})
    monkeypatch.setattr(cli, "sweep_abs_a", lambda fx, grid: fake)
    code, _, err = run(capsys, "fig1", "--grid-points", "3")
    assert code == 2
    assert "row 1" in err


def test_output_file_and_env_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cli.OUTPUT_DIR_ENV, str(tmp_path))
    code, out, _ = run(capsys, "fig1", "--grid-points", "4", "--output", "sub/fig1.csv")
    target = tmp_path / "sub" / "fig1.csv"
    assert code == 0 and out == ""
    assert target.read_text().startswith("abs_a,")
    assert [p.name for p in target.parent.iterdir()] == ["fig1.csv"]


def test_identical_runs_identical_bytes(capsys):
    first = run(capsys, "verify", "--seed", "9", "--instances", "30")[1]
    second = run(capsys, "verify", "--seed", "9", "--instances", "30")[1]
    assert first == second
