# test/test_cli.py

import json
import math
import os
import sys

# Ensure project root is on sys.path so top-level packages like `bqho` can be imported
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pytest

import bqho_cli
from utils.config import run_config_from_args
from bqho.errors import InvalidParams


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in list(os.environ):
        if key.startswith("BQHO_"):
            monkeypatch.delenv(key)


def run(capsys, *argv):
    code = bqho_cli.main(list(argv))
    return code, capsys.readouterr().out


def records(out):
    obj = json.loads(out)
    return obj["records"]


# ---- config ----
def test_config_defaults_and_env(monkeypatch):
    args = bqho_cli.build_parser().parse_args(["verify"])
    cfg = run_config_from_args(args)
    assert cfg.trunc == 32
    assert cfg.tol.rel_eps == 1e-12 and cfg.tol.abs_eps == 0.0
    assert (cfg.params.xi.x1, cfg.params.xi.x2) == (1.0, 1.0)
    assert cfg.fmt == "json" and cfg.out is None

    monkeypatch.setenv("BQHO_XI2", "2.5")
    monkeypatch.setenv("BQHO_TRUNC", "8")
    cfg = run_config_from_args(bqho_cli.build_parser().parse_args(["verify", "--trunc", "4"]))
    assert cfg.params.xi.x2 == 2.5
    assert cfg.trunc == 4

    monkeypatch.setenv("BQHO_TRUNC", "many")
    with pytest.raises(InvalidParams):
        run_config_from_args(bqho_cli.build_parser().parse_args(["verify"]))


# ---- spectrum ----
def test_spectrum_defaults(capsys):
    code, out = run(capsys, "spectrum", "--max-l", "1", "--max-lprime", "1")
    assert code == 0
    recs = records(out)
    assert [(r["l"], r["lprime"]) for r in recs] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert sorted({r["energy"]["x1"] for r in recs}) == [0.5, 1.5]
    assert sorted({r["energy"]["x2"] for r in recs}) == [0.5, 1.5]


def test_spectrum_mixed_xi(capsys):
    code, out = run(capsys, "spectrum", "--xi2", "2", "--max-l", "0", "--max-lprime", "1")
    assert code == 0
    assert records(out)[1]["energy"] == {"x1": 0.5, "x2": 3.0}


def test_spectrum_out_of_range(capsys):
    code, out = run(capsys, "spectrum", "--trunc", "4", "--max-l", "5")
    assert code == 2
    assert out == ""


def test_spectrum_csv(capsys):
    code, out = run(capsys, "spectrum", "--format", "csv", "--max-l", "1", "--max-lprime", "0")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "l,lprime,E1,E2,norm"
    assert lines[1].startswith("0,0,0.5,0.5,")
    assert lines[2].startswith("1,0,1.5,0.5,")
    assert "\r" not in out


# ---- wavefunction ----
def test_wavefunction_ground_state(capsys):
    code, out = run(capsys, "wavefunction", "--xmin", "-1", "--xmax", "1", "--samples", "3")
    assert code == 0
    origin = records(out)[1]
    assert origin["x"] == 0.0
    assert origin["u1_re"] == pytest.approx(math.pi ** -0.25)
    assert origin["u2_re"] == pytest.approx(math.pi ** -0.25)


def test_wavefunction_parity(capsys):
    code, out = run(capsys, "wavefunction", "--l", "1", "--lprime", "1", "--xmin", "-2", "--xmax", "2", "--samples", "5")
    assert code == 0
    recs = records(out)
    for left, right in zip(recs, reversed(recs)):
        assert left["u1_re"] == -right["u1_re"]
        assert left["u2_re"] == -right["u2_re"]


def test_wavefunction_null_cone_function(capsys):
    code, out = run(capsys, "wavefunction", "--w1", "0", "--w2", "1", "--samples", "7", "--unit-j")
    assert code == 0
    recs = records(out)
    assert all(r["u1_re"] == 0 and r["u1_im"] == 0 for r in recs)
    assert all(r["j_re"] == pytest.approx(-r["real_re"]) for r in recs)


@pytest.mark.parametrize("argv", [["--samples", "1"], ["--xmin", "1", "--xmax", "1"], ["--l", "61"]])
def test_wavefunction_bad_arguments(capsys, argv):
    code, _ = run(capsys, "wavefunction", *argv)
    assert code == 2


def test_wavefunction_to_file(tmp_path, capsys):
    target = tmp_path / "phi.csv"
    code, out = run(capsys, "wavefunction", "--format", "csv", "--samples", "4", "--out", str(target))
    assert code == 0
    assert out == ""
    text = target.read_bytes().decode()
    assert text.startswith("x,u1_re,u1_im,u2_re,u2_im\n")
    assert text.count("\n") == 5


def test_wavefunction_far_tails_stay_finite(capsys):
    def no_constants(token):
        raise AssertionError(f"non-finite value {token} in output")

    code, out = run(capsys, "wavefunction", "--l", "10", "--lprime", "10", "--xmin=-1e32", "--xmax=1e32", "--samples", "3")
    assert code == 0
    recs = json.loads(out, parse_constant=no_constants)["records"]
    assert recs[0]["u1_re"] == 0.0 and recs[2]["u2_re"] == 0.0
    assert recs[1]["u1_re"] != 0.0


def test_unwritable_out_path(tmp_path, capsys):
    code, out = run(capsys, "spectrum", "--out", str(tmp_path / "missing" / "spectrum.json"))
    assert code == 2
    assert out == ""


# ---- hermite ----
def test_hermite_values(capsys):
    code, out = run(capsys, "hermite", "--l", "2", "--theta1", "1", "--theta2", "1")
    assert code == 0
    assert records(out) == [{"l": 2, "coeffs": [-2, 0, 4], "value": {"x1": 2.0, "x2": 2.0}}]

    code, out = run(capsys, "hermite", "--l", "0", "--theta1", "0.3", "--theta2", "5")
    assert records(out)[0]["value"] == {"x1": 1.0, "x2": 1.0}

    code, out = run(capsys, "hermite", "--l", "3")
    assert records(out)[0]["coeffs"] == [0, -12, 0, 8]


def test_hermite_order_too_large(capsys):
    code, _ = run(capsys, "hermite", "--l", "61")
    assert code == 2


# ---- verify ----
def test_verify_core(capsys):
    code, out = run(capsys, "verify", "--suite", "core")
    recs = records(out)
    assert code == 0
    assert recs and all(r["passed"] for r in recs)
    assert {r["suite"] for r in recs} == {"core"}


def test_verify_rejects_bad_xi(capsys):
    code, out = run(capsys, "verify", "--suite", "oscillator", "--xi1", "0")
    assert code == 2
    assert out == ""


def test_verify_all_is_deterministic(capsys):
    code, first = run(capsys, "verify", "--suite", "all", "--xi2", "2")
    assert code == 0
    recs = records(first)
    assert all(r["passed"] for r in recs), [r for r in recs if not r["passed"]]
    assert any("null-cone" in r["check"] or "gives e1" in r["check"] for r in recs)
    _, second = run(capsys, "verify", "--suite", "all", "--xi2", "2")
    assert first == second


def test_verify_core_and_oscillator_suites_pass():
    from bqho import verify
    from bqho.core import Tolerance
    from bqho.oscillator import OscillatorParams

    ctx = verify.VerifyContext(OscillatorParams.from_components(xi2=2.0), 32, Tolerance(), 20240101)
    results = verify.run_suites(["core", "oscillator"], ctx)
    failed = [r for r in results if not r.passed]
    assert not failed, failed
    names = {r.check for r in results}
    assert "dagger is an involutive ring automorphism" in names
    assert "rescalings that flip one component of xi are rejected" in names


def test_verify_failure_exit_code(capsys, monkeypatch):
    from bqho import verify

    failing = verify.CheckResult("core", "forced", False, 1.0, 0.0)
    monkeypatch.setitem(verify.SUITES, "core", lambda ctx: [failing])
    code, out = run(capsys, "verify", "--suite", "core")
    assert code == 1
    assert records(out)[0]["passed"] is False
