"""CLI wiring: subcommands, formats, exit codes, files, determinism."""

import json
import os
import subprocess
import sys

import pytest

from gkbench import budget
from gkbench.campaigns import run_campaign
from gkbench.cli import main
from gkbench.gammalab import rn_dim


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def machine_lines(out):
    return [json.loads(line) for line in out.strip().splitlines() if line]


def test_verify_step4_emits_twelve_passing_records(capsys):
    code, out, _ = run(capsys, "verify", "step4", "--n", "6", "--format", "machine")
    records = machine_lines(out)
    assert code == 0
    assert len(records) == 12
    assert all(r["verdict"] == "pass" for r in records)
    claims = [r["claim_id"] for r in records]
    assert claims == sorted(claims)


def test_verify_unknown_campaign_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "does-not-exist")
    assert code == 2
    assert "unknown campaign" in err


def test_gamma_coeff(capsys):
    code, out, _ = run(
        capsys,
        "gamma", "coeff", "--power", "4", "x1^-1*x2^-1*x3^-1*x4^-1",
        "--format", "machine",
    )
    assert code == 0
    assert machine_lines(out)[0]["outputs"]["coefficient"] == 24


def test_gamma_coeff_rejects_bad_target(capsys):
    code, _, err = run(capsys, "gamma", "coeff", "--power", "1", "x1")
    assert code == 2
    assert "nonpositive" in err


def test_gamma_witness(capsys):
    code, out, _ = run(capsys, "gamma", "witness", "--degree", "4", "--format", "machine")
    record = machine_lines(out)[0]
    assert code == 0
    assert record["outputs"]["diagonal"] == [1, 2, 6, 24]
    assert record["outputs"]["independent"] is True


def test_gamma_growth_and_estimate_pipeline(tmp_path, capsys):
    series_file = tmp_path / "series.txt"
    code, out, _ = run(
        capsys,
        "gamma", "growth", "--n", "2", "--rmax", "16",
        "--series-out", str(series_file), "--format", "machine",
    )
    assert code == 0
    records = {r["claim_id"]: r for r in machine_lines(out)}
    assert records["gamma.growth.slope"]["outputs"]["slope"] == 16
    assert records["gamma.growth.degree"]["outputs"]["degree"] == "1"
    text = series_file.read_text()
    assert text.splitlines()[0] == f"4,{rn_dim(2, 4)}"

    code, out, _ = run(capsys, "growth", "estimate", str(series_file), "--format", "machine")
    assert code == 0
    records = {r["claim_id"]: r for r in machine_lines(out)}
    assert records["growth.degree"]["outputs"]["degree"] == "1"
    assert records["growth.slope"]["outputs"]["slope"] == 16


def test_quantum_nf(capsys):
    code, out, _ = run(
        capsys, "quantum", "nf", "--n", "2", "--p", "2", "--t", "1", "x2*x1",
        "--format", "machine",
    )
    assert code == 0
    assert machine_lines(out)[0]["outputs"]["normal_form"] == "-z*x1*x2"


def test_quantum_mul(capsys):
    code, out, _ = run(
        capsys, "quantum", "mul", "--n", "2", "--p", "2", "--t", "1",
        "x1 + x2", "x1 - x2", "--format", "machine",
    )
    assert code == 0
    product = machine_lines(out)[0]["outputs"]["product"]
    assert product == "x1^2 + (-1 - z)*x1*x2 - x2^2"


def test_quantum_growth(capsys):
    code, out, _ = run(
        capsys, "quantum", "growth", "--n", "3", "--p", "2", "--t", "1",
        "--rmax", "12", "--format", "machine",
    )
    assert code == 0
    assert machine_lines(out)[0]["outputs"]["degree"] == "3"


def test_quantum_hom_check_default_power_map(capsys):
    code, out, _ = run(
        capsys, "quantum", "hom-check", "--n", "2", "--p", "2", "--t", "2",
        "--format", "machine",
    )
    assert code == 0
    assert machine_lines(out)[0]["outputs"]["ok"] is True


def test_quantum_hom_check_swap_fails_with_exit_one(capsys):
    code, out, _ = run(
        capsys, "quantum", "hom-check", "--n", "2", "--p", "2", "--t", "1",
        "--src-t", "1", "--images", "x2; x1", "--format", "machine",
    )
    assert code == 1
    record = machine_lines(out)[0]
    assert record["outputs"]["ok"] is False
    assert record["outputs"]["failing_pair"] == [1, 2]


def test_verify_lemma51_reports_growth_degree_three(capsys):
    code, out, _ = run(
        capsys, "verify", "lemma5.1", "--n", "3", "--p", "2", "--t", "1",
        "--rmax", "12", "--format", "machine",
    )
    assert code == 0
    records = {r["claim_id"]: r for r in machine_lines(out)}
    assert records["lemma5.1.growth"]["outputs"]["degree"] == "3"


def test_verify_step8_reports_slope_sixteen(capsys):
    code, out, _ = run(
        capsys, "verify", "step8", "--n", "2", "--rmax", "16", "--format", "machine",
    )
    assert code == 0
    records = {r["claim_id"]: r for r in machine_lines(out)}
    assert records["step8.slope.n02"]["outputs"]["slope"] == 16


def test_eval_contexts(capsys):
    code, out, _ = run(capsys, "eval", "--context", "field", "1/2 + s1*s2", "--format", "machine")
    assert code == 0
    assert machine_lines(out)[0]["outputs"]["canonical"] == "1/2 + s1*s2"

    code, out, _ = run(capsys, "eval", "--context", "twisted", "x1*s1", "--format", "machine")
    assert code == 0
    assert machine_lines(out)[0]["outputs"]["canonical"] == "-s1*x1"


def test_eval_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "eval", "--context", "quantum", "g")
    assert code == 2
    assert "1:1" in err


def test_out_flag_writes_file(tmp_path, capsys):
    out_file = tmp_path / "report.jsonl"
    code, out, _ = run(
        capsys, "verify", "tower", "--format", "machine", "--out", str(out_file)
    )
    assert code == 0
    assert out == ""
    lines = machine_lines(out_file.read_text())
    assert lines and all(r["verdict"] == "pass" for r in lines)


def test_campaigns_deterministic_given_seed():
    def strip_millis(records):
        return [(r.claim_id, tuple(sorted(map(str, r.inputs.items()))),
            tuple(sorted((k, str(v)) for k, v in r.outputs.items())), r.verdict)
            for r in records]

    first = run_campaign("step3", {"trials": 120}, seed=42)
    second = run_campaign("step3", {"trials": 120}, seed=42)
    assert strip_millis(first) == strip_millis(second)


def test_budget_cap_enforced():
    budget.set_cap(10)
    try:
        with pytest.raises(budget.WorkBudgetExceeded):
            rn_dim(4, 6)  # charges 256 > 10
    finally:
        budget.set_cap(budget.DEFAULT_CAP)


def test_budget_env_var_caps_cli_subprocess():
    env = dict(os.environ, WORKBENCH_MAX_OPS="10")
    proc = subprocess.run(
        [sys.executable, "-m", "gkbench.cli", "verify", "step4-oracle"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 2
    assert "budget" in proc.stderr
