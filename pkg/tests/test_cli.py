# tests/test_cli.py
import json

import pytest
from typer.testing import CliRunner

from qfsplit.main import app

runner = CliRunner(mix_stderr=False)

SEVEN_A1 = """p: 2
variables: {x: 1, y: 1, z: 1, w: 2}
f: "w^2 + x*y*z*(x + y + z)"
G: "(x*y + y*z + x*z)*w"
"""


@pytest.fixture
def seven_a1(tmp_path):
    path = tmp_path / "7a1.yaml"
    path.write_text(SEVEN_A1, encoding="utf-8")
    return path


def run(*args):
    return runner.invoke(app, [str(a) for a in args])


# ---------------------------------------------------------
# height
# ---------------------------------------------------------
def test_height_json(seven_a1):
    result = run("height", seven_a1, "--json")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["command"] == "height"
    assert report["result"]["outcome"] == "height"
    assert report["result"]["height"] == 3
    assert [level["member"] for level in report["result"]["levels"]] == [True, True, False]
    assert "elapsed" in report


def test_height_without_timing_is_byte_stable(seven_a1, tmp_path):
    first = run("height", seven_a1, "--json", "--no-timing")
    second = run("height", seven_a1, "--json", "--no-timing", "--output", tmp_path / "out.json")
    assert first.stdout == second.stdout
    assert "elapsed" not in first.stdout
    assert (tmp_path / "out.json").read_text(encoding="utf-8") == first.stdout


def test_height_table(seven_a1):
    result = run("height", seven_a1)
    assert result.exit_code == 0
    assert "height: 3" in result.stdout


def test_height_cutoff(seven_a1):
    report = json.loads(run("height", seven_a1, "--json", "--max-level", "2").stdout)
    assert report["result"]["outcome"] == "exceeds_cutoff"
    assert report["result"]["summary"] == "> 2"


def test_bad_presentation_exits_with_usage_code(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("p: 2\nvariables: {x: 1}\nf: x^-1\n", encoding="utf-8")
    result = run("height", path)
    assert result.exit_code == 2
    assert "line" in result.stderr
    assert run("height", tmp_path / "missing.yaml").exit_code == 2


# ---------------------------------------------------------
# delta1, parse-check, witt-table
# ---------------------------------------------------------
def test_delta1_shortcut(seven_a1):
    result = run("delta1", seven_a1, "--shortcut", "--json")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["power"] == 1
    assert report["shortcut_agrees"] is True
    assert report["degree"] == 8


def test_delta1_shortcut_needs_power_one(tmp_path):
    path = tmp_path / "cubic.yaml"
    path.write_text("p: 3\nvariables: {x: 1, y: 1, z: 1}\nf: x^3 + y^3 + z^3\n", encoding="utf-8")
    assert run("delta1", path, "--shortcut").exit_code == 2
    result = run("delta1", path, "--modulus", "9", "--json")
    assert json.loads(result.stdout)["modulus"] == 9


def test_parse_check_prints_canonical_form(seven_a1):
    result = run("parse-check", seven_a1)
    assert result.exit_code == 0
    assert 'f: w^2 + x*y*z^2 + x*y^2*z + x^2*y*z' in result.stdout
    report = json.loads(run("parse-check", seven_a1, "--json").stdout)
    assert report["degree_f"] == 4
    assert report["degree_G"] == 4


def test_witt_table(tmp_path):
    export = tmp_path / "w2.txt"
    result = run("witt-table", "--p", "2", "--n", "2", "--kind", "S", "--json", "--export", export)
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert list(report["polynomials"]) == ["S"]
    assert all(g["homogeneous"] for g in report["grading"])
    assert "S1 = " in export.read_text(encoding="utf-8")


def test_witt_table_errors():
    assert run("witt-table", "--p", "4", "--n", "2").exit_code == 2
    assert run("witt-table", "--p", "2", "--n", "2", "--kind", "Q").exit_code == 2


# ---------------------------------------------------------
# verify-paper, enumerate
# ---------------------------------------------------------
def test_verify_paper_7a1():
    result = run("verify-paper", "--instance", "7A1", "--no-identities", "--json", "--no-timing")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["passed"]
    [instance] = report["instances"]
    assert [case["computed"]["height"] for case in instance["cases"]] == [2, 3]
    assert instance["universal"] is None
    assert report["command"] == "verify-paper"


def test_verify_catalog_is_an_alias():
    args = ("--instance", "4A2", "--no-identities", "--json", "--no-timing")
    alias = run("verify-catalog", *args)
    assert alias.exit_code == 0, alias.output
    report = json.loads(alias.stdout)
    assert report["command"] == "verify-catalog"
    assert report["instances"] == json.loads(run("verify-paper", *args).stdout)["instances"]


def test_verify_paper_needs_a_selection():
    assert run("verify-paper").exit_code == 2
    assert run("verify-paper", "--all", "--instance", "7A1").exit_code == 2
    assert run("verify-paper", "--instance", "9A1").exit_code == 2


def test_enumerate_random_needs_seed():
    assert run("enumerate", "--instance", "7A1", "--mode", "random", "--samples", "8").exit_code == 2


def test_enumerate_confirmed():
    result = run("enumerate", "--instance", "7A1", "--mode", "random", "--samples", "32", "--seed", "4", "--json")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["confirmed"]
    assert report["checked"] == 32
    assert len(report["monomials"]) == 22


def test_enumerate_counterexamples_exit_with_mismatch():
    result = run(
        "enumerate", "--instance", "7A1", "--mode", "random", "--samples", "64", "--seed", "4", "--bound", "1", "--json"
    )
    assert result.exit_code == 1
    report = json.loads(result.stdout)
    assert not report["confirmed"]
    assert report["counterexamples"]
    assert report["counterexamples"][0]["G"]


def test_enumerate_bad_param():
    result = run("enumerate", "--instance", "4A1D4", "--param", "a", "--mode", "random", "--seed", "1")
    assert result.exit_code == 2


def test_enumerate_reports_every_sampled_assignment():
    result = run(
        "enumerate", "--instance", "4A1D4", "--mode", "random", "--samples", "8", "--seed", "3",
        "--param-samples", "2", "--json",
    )
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["config"]["parameter_samples"] == 2
    assert 1 <= len(report["assignments"]) <= 2
    assert report["checked"] == 8 * len(report["assignments"])
    assert report["confirmed"]


@pytest.mark.slow
def test_verify_paper_all_is_byte_stable():
    first = run("verify-paper", "--all", "--json", "--no-timing")
    second = run("verify-paper", "--all", "--json", "--no-timing")
    assert first.exit_code == 0, first.output
    assert first.stdout == second.stdout
