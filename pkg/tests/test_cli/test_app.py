"""End-to-end tests of the nlstop command line."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from nlstop.cli.app import app, run
from nlstop.errors import AssumptionViolationError
from nlstop.storage.files import read_value_table_csv

SIN_GAIN = "sin:1,1,4,0"
CONCAVE_GAIN = "poly:0,1,-1"

pytestmark = pytest.mark.usefixtures("clean_env")

runner = CliRunner()


def invoke(*args: str):
    return runner.invoke(app, list(args))


def test_oracle_worst_case_writes_table(out_dir: Path):
    path = out_dir / "v.csv"
    result = invoke(
        "oracle", "--risk", "worst-case", "--gain", SIN_GAIN, "--grid", "4001", "--out", str(path)
    )
    assert result.exit_code == 0, result.output
    assert "0.125000" in result.output

    table = read_value_table_csv(path)
    intervals = table.continuation_intervals()
    assert len(intervals) == 2
    assert intervals[0] == pytest.approx((0.125, 0.625), abs=1e-3)
    assert intervals[1] == pytest.approx((0.75, 1.0), abs=1e-3)


def test_solve_concave_gain_has_no_components(out_dir: Path):
    comps = out_dir / "c.json"
    result = invoke(
        "solve", "--risk", "linear", "--gain", CONCAVE_GAIN, "--components", str(comps)
    )
    assert result.exit_code == 0, result.output
    assert "No continuation region" in result.output
    assert json.loads(comps.read_text()) == []


def test_solve_sin_gain_with_cross_check(out_dir: Path):
    comps = out_dir / "c.json"
    result = invoke(
        "solve",
        "--risk", "linear",
        "--gain", SIN_GAIN,
        "--grid", "201",
        "--components", str(comps),
        "--cross-check",
        "--extend",
    )
    # a coarse majorant may sit slightly above V, which fails the report
    assert result.exit_code in (0, 1), result.output
    assert len(json.loads(comps.read_text())) == 2
    assert "sup_norm" in result.output


def test_solve_is_thread_independent(out_dir: Path):
    outputs = []
    for threads in ("1", "4"):
        path = out_dir / f"v{threads}.csv"
        result = invoke(
            "solve", "--risk", "entropic", "--gain", SIN_GAIN, "--grid", "501",
            "--threads", threads, "--out", str(path),
        )
        assert result.exit_code == 0, result.output
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_majorant_writes_table(out_dir: Path):
    path = out_dir / "w.csv"
    result = invoke(
        "majorant", "--risk", "linear", "--gain", CONCAVE_GAIN, "--grid", "101",
        "--param-res", "16", "--refine", "0", "--out", str(path),
    )
    assert result.exit_code == 0, result.output
    assert path.read_text().splitlines()[0] == "x,g,w,y,z,beta,gamma"


def test_axioms_pass():
    result = invoke("axioms", "--risk", "entropic", "--trials", "200")
    assert result.exit_code == 0, result.output
    assert "PASS" in result.output


def test_axioms_strict_fails_for_worst_case():
    result = invoke("axioms", "--risk", "worst-case", "--trials", "200", "--strict")
    assert result.exit_code == 1
    assert "FAIL" in result.output


def test_verify_saved_solution(out_dir: Path):
    path = out_dir / "v.csv"
    assert invoke(
        "oracle", "--risk", "linear", "--gain", SIN_GAIN, "--grid", "1001", "--out", str(path)
    ).exit_code == 0

    result = invoke(
        "verify", "--risk", "linear", "--gain", SIN_GAIN, "--x0", "0.5",
        "--paths", "20000", "--dt", "1e-3", "--seed", "42", "--solution", str(path),
    )
    assert result.exit_code == 0, result.output
    assert "Value table read from" in result.output


def test_verify_takes_exit_rule_from_components(out_dir: Path):
    table, comps = out_dir / "v.csv", out_dir / "c.json"
    assert invoke(
        "solve", "--risk", "linear", "--gain", SIN_GAIN, "--grid", "1001",
        "--out", str(table), "--components", str(comps),
    ).exit_code == 0

    result = invoke(
        "verify", "--risk", "linear", "--gain", SIN_GAIN, "--x0", "0.5",
        "--paths", "20000", "--dt", "1e-3", "--seed", "42",
        "--solution", str(table), "--components", str(comps),
    )
    assert result.exit_code == 0, result.output
    assert "Exit rule from" in result.output


def test_verify_rejects_incomplete_components(out_dir: Path):
    comps = out_dir / "c.json"
    comps.write_text('[{"x_minus": 0.1, "x_plus": 0.2}]')
    result = invoke(
        "verify", "--risk", "linear", "--gain", SIN_GAIN, "--components", str(comps),
        "--paths", "100",
    )
    assert result.exit_code == 2


def test_unknown_flag_is_a_usage_error():
    assert run(["solve", "--risk", "linear", "--gain", SIN_GAIN, "--bogus"]) == 2


def test_unknown_risk_is_a_usage_error():
    assert invoke("oracle", "--risk", "cvar", "--gain", SIN_GAIN).exit_code == 2


def test_bad_gain_names_the_token():
    result = invoke("oracle", "--risk", "linear", "--gain", "poly:1,x")
    assert result.exit_code == 2
    assert "'x'" in result.output


def test_negative_gain_is_rejected():
    result = invoke("oracle", "--risk", "linear", "--gain", "poly:-1")
    assert result.exit_code == 2


def test_small_grid_names_the_flag():
    result = invoke("oracle", "--risk", "linear", "--gain", SIN_GAIN, "--grid", "50")
    assert result.exit_code == 2
    assert "--grid" in result.output


def test_solve_worst_case_points_to_oracle():
    result = invoke("solve", "--risk", "worst-case", "--gain", SIN_GAIN)
    assert result.exit_code == 2
    assert "oracle" in result.output


def test_assumption_violation_exits_3(mocker):
    mocker.patch(
        "nlstop.solver.solve", side_effect=AssumptionViolationError("component falls below g")
    )
    result = invoke("solve", "--risk", "linear", "--gain", SIN_GAIN)
    assert result.exit_code == 3
    assert "falls below g" in result.output


def test_unwritable_output_exits_2(out_dir: Path):
    blocker = out_dir / "blocker"
    blocker.write_text("")
    result = invoke(
        "oracle", "--risk", "linear", "--gain", SIN_GAIN, "--out", str(blocker / "v.csv")
    )
    assert result.exit_code == 2
    assert "cannot write" in result.output


def test_run_returns_zero_on_success():
    assert run(["axioms", "--risk", "linear", "--trials", "10"]) == 0
