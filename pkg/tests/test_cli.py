"""End-to-end CLI tests (subprocess, real exit codes and streams)."""

import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from lsradii import FormKind, LommelParam, SeriesConfig, convexity_radius


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "lsradii", *args],
                          capture_output=True, text=True)


def jsonl_records(stdout):
    return [json.loads(line) for line in stdout.splitlines() if line.strip()]


def test_eval_form_v_at_pi():
    cp = run_cli("--format", "jsonl", "eval", "--form", "v", "--nu", "0.5",
                 "--z", "3.14159265")
    assert cp.returncode == 0, cp.stderr
    rec = jsonl_records(cp.stdout)[0]
    assert rec["value"] == pytest.approx(4.0 / math.pi, rel=1e-7)


def test_eval_struve_kernel_near_first_zero():
    cp = run_cli("--format", "jsonl", "eval", "--kernel", "struve",
                 "--nu", "0.5", "--z", "6.28318531")
    assert cp.returncode == 0, cp.stderr
    assert abs(jsonl_records(cp.stdout)[0]["value"]) < 1e-8


def test_eval_kernel_with_derivative():
    cp = run_cli("--format", "jsonl", "eval", "--kernel", "lommel",
                 "--mu", "0.3", "--z", "0.3", "--deriv", "1")
    assert cp.returncode == 0, cp.stderr
    rec = jsonl_records(cp.stdout)[0]
    assert "deriv1" in rec and rec["value"] > 0.0


def test_eval_rejects_nonpositive_z():
    cp = run_cli("eval", "--form", "g", "--mu", "0.3", "--z", "0")
    assert cp.returncode == 1
    assert "z must be > 0" in cp.stderr


def test_radius_u_golden():
    cp = run_cli("--format", "jsonl", "radius", "--form", "u", "--nu", "0.5",
                 "--alpha", "0", "--beta", "1")
    assert cp.returncode == 0, cp.stderr
    rec = jsonl_records(cp.stdout)[0]
    assert rec["radius"] == pytest.approx(1.1382, abs=5e-4)
    assert 0.0 < rec["radius"] < rec["bracket_hi"]


def test_radius_beta_zero_is_convexity_radius():
    cp = run_cli("--format", "jsonl", "radius", "--form", "f", "--mu", "0.3",
                 "--alpha", "0", "--beta", "0")
    assert cp.returncode == 0, cp.stderr
    rec = jsonl_records(cp.stdout)[0]
    conv = convexity_radius(FormKind.F, LommelParam(0.3), cfg=SeriesConfig())
    assert rec["radius"] == pytest.approx(conv, abs=1e-10)


def test_radius_rejects_mu_zero():
    cp = run_cli("radius", "--form", "f", "--mu", "0", "--alpha", "0",
                 "--beta", "1")
    assert cp.returncode == 1
    assert "mu" in cp.stderr


def test_unsafe_flag_warns_and_computes():
    cp = run_cli("radius", "--form", "f", "--mu", "0", "--alpha", "0",
                 "--beta", "1", "--unsafe")
    assert cp.returncode == 1      # the prefactor pole is never computable
    cp = run_cli("--unsafe", "eval", "--kernel", "struve", "--nu", "0.8",
                 "--z", "1.0")
    assert cp.returncode == 0, cp.stderr
    assert "warning:" in cp.stderr


def test_zeros_struve_half():
    cp = run_cli("--format", "jsonl", "zeros", "--target", "struve",
                 "--nu", "0.5", "--count", "3")
    assert cp.returncode == 0, cp.stderr
    rec = jsonl_records(cp.stdout)[0]
    for got, n in zip(rec["zeros"], (1, 2, 3)):
        assert got == pytest.approx(2.0 * math.pi * n, abs=1e-9)
    assert rec["multiplicities"] == [2, 2, 2]


def test_zeros_deriv_reports_interlacing():
    cp = run_cli("--format", "jsonl", "zeros", "--target", "lommel-deriv",
                 "--mu", "0.3", "--count", "2")
    assert cp.returncode == 0, cp.stderr
    rec = jsonl_records(cp.stdout)[0]
    assert len(rec["zeros"]) == 2
    assert rec["interlaced_with_function_zeros"] is True


def test_zeros_count_zero():
    cp = run_cli("--format", "jsonl", "zeros", "--target", "lommel",
                 "--mu", "0.3", "--count", "0")
    assert cp.returncode == 0, cp.stderr
    assert jsonl_records(cp.stdout)[0]["zeros"] == []


def test_sweep_file_format(tmp_path: Path):
    out = tmp_path / "sweep.csv"
    cp = run_cli("sweep", "--form", "f", "--mu", "0.3", "--mu", "-0.2",
                 "--alpha", "0", "--beta", "1", "--r-min", "0.01",
                 "--r-max", "0.9", "--steps", "10", "--out", str(out))
    assert cp.returncode == 0, cp.stderr
    raw = out.read_bytes().decode("utf-8")
    assert "\r" not in raw
    lines = raw.splitlines()
    assert lines[0] == "form,param,r,lhs_printed,psi_unified"
    assert len(lines) == 1 + 2 * 10
    form, param, r, lhs, uni = lines[1].split(",")
    assert form == "f"
    assert float(param) == 0.3
    # 17 significant digits survive the round trip
    assert float(lhs) == pytest.approx(float(uni), rel=1e-12)


def test_sweep_single_step(tmp_path: Path):
    out = tmp_path / "one.csv"
    cp = run_cli("sweep", "--form", "w", "--nu", "0.5", "--r-min", "1.0",
                 "--r-max", "2.0", "--steps", "1", "--out", str(out))
    assert cp.returncode == 0, cp.stderr
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    assert float(lines[1].split(",")[2]) == 1.0


def test_sweep_param_family_mismatch(tmp_path: Path):
    cp = run_cli("sweep", "--form", "f", "--nu", "0.5", "--r-min", "0.1",
                 "--r-max", "0.5", "--steps", "2", "--out",
                 str(tmp_path / "x.csv"))
    assert cp.returncode == 1


def test_stdout_deterministic():
    args = ("--format", "jsonl", "radius", "--form", "v", "--nu", "0.5")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout           # byte-identical records
    assert "wall_ms" in a.stderr          # timing goes to the diagnostic stream


def test_table_format_default():
    cp = run_cli("radius", "--form", "v", "--nu", "0.5")
    assert cp.returncode == 0
    assert "radius" in cp.stdout
    assert "wall_ms" not in cp.stdout


def test_verify_passes():
    cp = run_cli("verify")
    assert cp.returncode == 0, cp.stdout + cp.stderr
    assert "FAIL" not in cp.stdout
    for needle in ("golden_radius_w", "trig_equation_v",
                   "interlacing_lommel_mu=0.3", "product_vs_series_struve"):
        assert needle in cp.stdout


def test_verify_jsonl_records():
    cp = run_cli("--format", "jsonl", "verify")
    assert cp.returncode == 0, cp.stderr
    recs = jsonl_records(cp.stdout)
    assert recs[-1]["failed"] == 0
    assert all(r["pass"] for r in recs[:-1])


def test_bad_usage_exit_code():
    assert run_cli("radius", "--form", "q", "--mu", "0.3").returncode == 1
    assert run_cli("frobnicate").returncode == 1
