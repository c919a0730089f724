"""Front-end behavior: parsing, output formats, schema validity, exit codes,
and byte-stability of repeated runs."""

import io
import json
from importlib import resources

import jsonschema
import pytest

from zetazeros.cli import EXIT_OK, EXIT_USAGE, run


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def load_schema():
    with resources.files("zetazeros").joinpath("schema.json").open("r") as fh:
        return json.load(fh)


def test_scan_emits_five_zero_rows():
    code, out, err = run_cli("scan", "--family", "Y", "--a", "0.3", "--from", "-10", "--to", "2")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "family,a,location,multiplicity_class,residual"
    locs = [round(float(line.split(",")[2])) for line in lines[1:]]
    assert locs == [-9, -7, -5, -3, -1]
    assert all(line.split(",")[3] == "simple-sign-change" for line in lines[1:])


def test_eval_point_value():
    code, out, _ = run_cli("eval", "--family", "P", "--a", "0.2", "--sigma", "0", "--t", "0")
    assert code == EXIT_OK
    header, row = out.strip().splitlines()
    assert header == "sigma,t,re,im"
    sigma, t, re, im = (float(x) for x in row.split(","))
    assert (sigma, t) == (0.0, 0.0)
    assert re == pytest.approx(-1.0, abs=1e-10)
    assert im == pytest.approx(0.0, abs=1e-12)


def test_eval_grid_and_json_schema():
    schema = load_schema()
    code, out, _ = run_cli(
        "eval", "--family", "Z", "--a", "1/3", "--sigma", "2:3:0.5", "--t", "0:1:1", "--format", "json"
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert payload["command"] == "eval"
    assert len(payload["rows"]) == 6


def test_eval_l_function_family():
    code, out, _ = run_cli(
        "eval", "--family", "L", "--char-modulus", "4", "--char-index", "1", "--sigma", "2"
    )
    assert code == EXIT_OK
    row = out.strip().splitlines()[1]
    re = float(row.split(",")[2])
    assert re == pytest.approx(0.915965594177219, abs=1e-9)  # Catalan


def test_verify_closed_forms_pass():
    code, out, _ = run_cli("verify", "--suite", "closed-forms", "--a", "1/6", "--family", "Z")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "suite,check,residual,tolerance,status"
    assert all(line.endswith("PASS") for line in lines[1:])
    assert all(float(line.split(",")[2]) < 1e-8 for line in lines[1:])


def test_verify_all_suites_json():
    schema = load_schema()
    code, out, _ = run_cli("verify", "--a", "1/3", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert {row["status"] for row in payload["rows"]} == {"PASS"}


def test_beta_sweep_csv():
    code, out, _ = run_cli(
        "beta", "--family", "P", "--a-from", "0.02", "--a-to", "0.14", "--a-points", "4"
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "a,family,beta,prediction,deviation"
    betas = [float(line.split(",")[2]) for line in lines[1:]]
    assert betas == sorted(betas)  # increasing in a


def test_beta_exact_rational_vs_decimal():
    # "1/6" follows the exact path (beta_P = 1); 0.166667 is generic numeric
    code, out, _ = run_cli("beta", "--family", "P", "--a", "1/6")
    assert code == EXIT_OK
    assert float(out.strip().splitlines()[1].split(",")[2]) == 1.0
    code, out, _ = run_cli("beta", "--family", "P", "--a", "0.166667")
    assert code == EXIT_OK
    val = float(out.strip().splitlines()[1].split(",")[2])
    assert val != 1.0
    assert val == pytest.approx(1.0, abs=1e-3)


def test_count_command():
    code, out, _ = run_cli(
        "count", "--family", "Z", "--a", "1/6",
        "--re-from", "-1", "--re-to", "2", "--im-from", "1", "--im-to", "30",
    )
    assert code == EXIT_OK
    row = out.strip().splitlines()[1]
    assert int(row.split(",")[6]) == 11


def test_count_json_schema():
    schema = load_schema()
    code, out, _ = run_cli(
        "count", "--family", "Z", "--a", "0.3",
        "--re-from", "2", "--re-to", "3", "--im-from", "1", "--im-to", "10",
        "--format", "json",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert payload["rows"][0]["count"] == 0


def test_scan_json_schema():
    schema = load_schema()
    code, out, _ = run_cli(
        "scan", "--family", "Z", "--a", "1/6", "--from", "-0.9", "--to", "0.9", "--format", "json"
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert payload["rows"][0]["multiplicity_class"] == "even-touch"


def test_output_byte_stable():
    args = ("scan", "--family", "Y", "--a", "0.3", "--from", "-6", "--to", "2")
    _, out1, _ = run_cli(*args)
    _, out2, _ = run_cli(*args)
    assert out1 == out2
    args = ("verify", "--suite", "functional-equations", "--a", "0.3", "--format", "json")
    _, out1, _ = run_cli(*args)
    _, out2, _ = run_cli(*args)
    assert out1 == out2


def test_usage_errors_exit_one():
    code, _, err = run_cli("scan", "--family", "Y", "--a", "0.3", "--from", "2", "--to", "-2")
    assert code == EXIT_USAGE
    assert "error" in err
    code, _, _ = run_cli("scan", "--family", "nosuch", "--a", "0.3", "--from", "0", "--to", "1")
    assert code == EXIT_USAGE
    code, _, _ = run_cli("frobnicate")
    assert code == EXIT_USAGE
    # pole inside an eval grid point is a domain error
    code, _, err = run_cli("eval", "--family", "Z", "--a", "0.3", "--sigma", "1", "--t", "0")
    assert code == EXIT_USAGE


def test_tolerance_env_override(monkeypatch):
    monkeypatch.setenv("ZETAZEROS_TOL", "1e-9")
    code, out, _ = run_cli("eval", "--family", "Z", "--a", "0.3", "--sigma", "2", "--t", "0")
    assert code == EXIT_OK
    # zeta(2, 0.3) + zeta(2, 0.7), frozen from mpmath
    assert float(out.strip().splitlines()[1].split(",")[2]) == pytest.approx(
        15.079413702802341092, abs=1e-8
    )
