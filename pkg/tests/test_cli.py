import csv
import io
import json

import jsonschema
import pytest
from click.testing import CliRunner

from meixner_sobolev import suites
from meixner_sobolev.cli import main, output_schema

SCHEMA = output_schema()


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env)


def as_json(result):
    payload = json.loads(result.output)
    jsonschema.validate(payload, SCHEMA)
    return payload


def as_rows(result):
    return list(csv.reader(io.StringIO(result.output)))


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_eval_family_examples():
    r = run("eval", "--family", "sobolev", "--beta", "2", "--c", "1/2", "--lambda", "1", "--n", "2", "--x", "0")
    assert r.exit_code == 0 and r.output == "13/5\n"
    r = run("eval", "--family", "meixner", "--beta", "1", "--c", "1/2", "--n", "0", "--x", "7")
    assert r.exit_code == 0 and r.output == "1\n"
    r = run("eval", "--family", "laguerre", "--alpha", "1", "--n", "2", "--x", "1/2", "--format", "json")
    assert as_json(r)["value"] == "13/8"


def test_eval_decimal_x_is_exact():
    r = run("eval", "--family", "meixner", "--beta", "2", "--c", "1/2", "--n", "1", "--x", "0.1")
    assert r.output == "19/10\n"


def test_eval_generating_function():
    r = run("eval", "--gf", "gm", "--beta", "1", "--c", "1/2", "--lambda", "1", "--x", "3", "--omega", "0.1", "--format", "json")
    assert r.exit_code == 0
    payload = as_json(r)
    assert payload["abs_gap"] < 1e-9 and payload["passed"]
    r = run("eval", "--gf", "gl", "--alpha", "0", "--lambda-t", "1", "--x", "2", "--omega", "0.1", "--format", "csv")
    assert r.exit_code == 0
    rows = as_rows(r)
    assert rows[0][:4] == ["gf", "x", "omega", "N"] and rows[1][-1] == "True"


def test_eval_failing_gap_exits_one():
    r = run("eval", "--gf", "gm", "--beta", "2", "--c", "1/2", "--lambda", "1", "--x", "3", "--omega", "0.14", "--N", "5")
    assert r.exit_code == 1


@pytest.mark.parametrize(
    "args",
    [
        ("eval", "--family", "meixner", "--beta", "0.5", "--c", "1/2", "--n", "1", "--x", "1"),
        ("eval", "--family", "sobolev", "--beta", "2", "--c", "1/2", "--n", "1", "--x", "1"),
        ("eval", "--gf", "gm", "--beta", "2", "--c", "1/2", "--lambda", "1", "--x", "1", "--omega", "0.9"),
        ("eval", "--x", "1"),
        ("coeffs", "--beta", "2", "--c", "3/2", "--lambda", "1"),
        ("verify", "--suite", "all", "--c", "0"),
        ("verify", "--suite", "nonsense"),
        ("limit-sweep", "--alpha", "-1", "--lambda-t", "1"),
        ("limit-sweep", "--alpha", "1", "--lambda-t", "1", "--k-min", "9", "--k-max", "4"),
    ],
)
def test_configuration_errors_exit_two(args):
    r = run(*args)
    assert r.exit_code == 2, r.output


def test_coeffs_sequences():
    r = run("coeffs", "--beta", "2", "--c", "1/2", "--lambda", "1", "--N", "2")
    assert r.exit_code == 0
    rows = as_rows(r)
    assert rows[0] == ["n", "a_n", "q_n"]
    assert ["1", "4/5", "1"] in rows
    assert rows[3][0] == "2" and rows[3][2] == "5/4"


def test_coeffs_lambda_zero():
    rows = as_rows(run("coeffs", "--beta", "3", "--c", "1/3", "--lambda", "0", "--N", "6"))
    assert all(r[1] == "1" and r[2] == "1" for r in rows[1:])


def test_coeffs_json():
    payload = as_json(run("coeffs", "--beta", "2", "--c", "1/2", "--lambda", "3/2", "--N", "2", "--format", "json"))
    assert payload["constants"]["exact"] == {"a_limit": "1/2", "gamma": "3/7", "delta": "4/7"}
    assert payload["sobolev"][1]["coeffs"] == ["2", "-1"]


def test_coeffs_other_tables():
    rows = as_rows(run("coeffs", "--beta", "2", "--c", "1/2", "--lambda", "1", "--N", "2", "--table", "sobolev"))
    assert rows[0] == ["n", "power", "coeff"]
    assert ["2", "0", "13/5"] in rows and ["2", "1", "-33/10"] in rows
    rows = as_rows(run("coeffs", "--beta", "1", "--c", "1/2", "--lambda", "1", "--table", "constants"))
    assert [r[0] for r in rows[1:]] == ["a_limit", "gamma", "delta"]


def test_verify_orthogonality():
    r = run("verify", "--suite", "orthogonality", "--beta", "2", "--c", "1/2", "--lambda", "1", "--max-n", "12")
    assert r.exit_code == 0
    payload = as_json(r)
    assert payload["passed"]
    assert all(ch["measured"] == 0 for s in payload["suites"] for ch in s["checks"])


def test_verify_gf_beta1_and_csv():
    r = run("verify", "--suite", "gf-beta1", "--format", "csv")
    assert r.exit_code == 0
    rows = as_rows(r)
    assert rows[0][:4] == ["suite", "check", "identity", "passed"]
    assert all(row[3] == "True" for row in rows[1:])


def test_verify_failure_exits_one(monkeypatch):
    def broken(cfg):
        return [suites.Check("orthogonality", "forced", "forced failure", False, 1.0, 0.0)]

    monkeypatch.setitem(suites.SUITES, "orthogonality", broken)
    r = run("verify", "--suite", "orthogonality")
    assert r.exit_code == 1
    assert as_json(r)["passed"] is False


def test_verify_rejects_incompatible_grid():
    r = run("verify", "--suite", "F-coeffs", "--beta", "1")
    assert r.exit_code == 2


def test_verify_precision_env():
    r = run("verify", "--suite", "F-coeffs", env={"MEIXNER_SOBOLEV_DPS": "40"})
    assert r.exit_code == 0
    assert as_json(r)["dps"] == 40
    r = run("verify", "--suite", "F-coeffs", env={"MEIXNER_SOBOLEV_DPS": "lots"})
    assert r.exit_code == 2


def test_verify_is_deterministic():
    strip = lambda p: [[{k: v for k, v in ch.items()} for ch in s["checks"]] for s in p["suites"]]
    first = as_json(run("verify", "--suite", "hypergeom-identities", "--seed", "7"))
    second = as_json(run("verify", "--suite", "hypergeom-identities", "--seed", "7"))
    assert strip(first) == strip(second)


def test_table():
    r = run("table", "--gf", "gm", "--beta", "5/2", "--c", "1/2", "--lambda", "1", "--format", "json")
    assert r.exit_code == 0
    payload = as_json(r)
    assert len(payload["rows"]) == 16 and payload["passed"]
    r = run("table", "--gf", "gl", "--alpha", "1", "--lambda-t", "1", "--x", "3", "--omega", "0.1")
    rows = as_rows(r)
    assert rows[0] == ["x", "omega", "closed", "truncated", "abs_gap", "rel_gap"] and len(rows) == 2


def test_limit_sweep():
    rows = as_rows(run("limit-sweep", "--alpha", "1", "--lambda-t", "1", "--n", "1", "--x", "2", "--series", "meixner-laguerre"))
    assert rows[0] == ["series", "n", "k", "c", "error", "monotone"]
    assert rows[1][3] == "15/16" and float(rows[1][4]) == 2 / 16
    for row in rows[1:]:
        num, den = map(int, row[3].split("/"))
        assert float(row[4]) == 2 * (den - num) / den
        assert row[5] == "True"
    rows = as_rows(run("limit-sweep", "--alpha", "0", "--lambda-t", "1", "--n", "0", "--series", "sobolev", "--series", "q"))
    assert all(float(r[4]) == 0 for r in rows[1:])


def test_limit_sweep_json(tmp_path):
    out = tmp_path / "sweep.json"
    r = run("limit-sweep", "--alpha", "1", "--lambda-t", "1", "--n", "3", "--format", "json", "--out", str(out))
    assert r.exit_code == 0 and r.output == ""
    payload = json.loads(out.read_text())
    jsonschema.validate(payload, SCHEMA)
    assert [s["name"] for s in payload["series"]] == ["meixner-laguerre", "sobolev", "q", "gf"]
    assert all(s["monotone"] for s in payload["series"])
