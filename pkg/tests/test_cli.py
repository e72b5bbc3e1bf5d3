"""CLI behavior: golden outputs, formats, exit codes, determinism."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from betakit.cli import run_cli
from betakit.highprec import BudgetExceededError

GOLDEN = Path(__file__).parent / "golden"


class TestGoldenOutputs:
    def test_beta_odd_json(self, run_betakit):
        r = run_betakit(["beta", "odd", "--k", "1", "--digits", "12", "--format", "json"])
        assert r.returncode == 0
        assert r.stdout == (GOLDEN / "beta_odd_k1_json.stdout").read_bytes()
        # the payload itself is pinned independently of the golden file
        assert r.stdout == b'{"coeff":"1/32","pi_power":3,"decimal":"0.968946146259","digits":12}\n'

    def test_beta_even_text(self, run_betakit):
        r = run_betakit(["beta", "even", "--k", "1", "--tol", "1e-8", "--format", "text"])
        assert r.returncode == 0
        assert r.stdout == (GOLDEN / "beta_even_k1_text.stdout").read_bytes()
        text = r.stdout.decode()
        assert "0.91596559" in text
        err_est = float(text.split("abs error estimate ")[1].split(",")[0])
        assert err_est <= 1e-8

    def test_beta_odd_invalid_k_usage(self, run_betakit):
        r = run_betakit(["beta", "odd", "--k", "-1"])
        assert r.returncode == 2
        assert r.stdout == b""
        assert r.stderr == (GOLDEN / "beta_odd_invalid_usage.stderr").read_bytes()
        assert b"usage:" in r.stderr

    def test_byte_identical_across_runs(self, run_betakit):
        args = ["beta", "even", "--k", "2", "--format", "json"]
        a, b = run_betakit(args), run_betakit(args)
        assert a.stdout == b.stdout
        assert a.returncode == b.returncode == 0


class TestBetaOdd:
    def test_cross_check_flag(self, run_betakit):
        r = run_betakit(["beta", "odd", "--k", "3", "--cross-check", "--format", "json"])
        assert r.returncode == 0
        payload = json.loads(r.stdout)
        assert payload["cross_check"]["match"] is True
        assert payload["cross_check"]["coeff"] == payload["coeff"]

    def test_csv_format(self, run_betakit):
        r = run_betakit(["beta", "odd", "--k", "0", "--format", "csv"])
        lines = r.stdout.decode().splitlines()
        assert lines[0] == "coeff,pi_power,decimal,digits"
        assert lines[1] == "1/4,1,0.785398163397,12"

    def test_digits_env_override(self, run_betakit):
        r = run_betakit(
            ["beta", "odd", "--k", "1", "--format", "json"],
            env_extra={"BETAKIT_DIGITS": "6"},
        )
        payload = json.loads(r.stdout)
        assert payload["digits"] == 6
        assert payload["decimal"] == "0.968946"

    def test_explicit_digits_beats_env(self, run_betakit):
        r = run_betakit(
            ["beta", "odd", "--k", "1", "--digits", "4", "--format", "json"],
            env_extra={"BETAKIT_DIGITS": "6"},
        )
        assert json.loads(r.stdout)["digits"] == 4

    def test_max_k_guard(self, run_betakit):
        r = run_betakit(["beta", "odd", "--k", "51"])
        assert r.returncode == 2
        r = run_betakit(["beta", "odd", "--k", "51", "--max-k", "60"])
        assert r.returncode == 0


class TestBetaEven:
    def test_json_schema(self, run_betakit):
        r = run_betakit(["beta", "even", "--k", "1", "--format", "json"])
        payload = json.loads(r.stdout)
        assert set(payload) == {"quadrature", "series", "abs_diff"}
        assert set(payload["quadrature"]) == {"value", "abs_error_estimate", "n_evals"}
        assert payload["abs_diff"] < 1e-8

    def test_show_erratum_lists_both_signs(self, run_betakit):
        r = run_betakit(["beta", "even", "--k", "1", "--show-erratum", "--format", "json"])
        payload = json.loads(r.stdout)
        variants = payload["sign_variants"]
        assert variants["corrected"] > 0 > variants["printed"]
        assert variants["printed"] == -variants["corrected"]

    def test_rejects_k_zero(self, run_betakit):
        assert run_betakit(["beta", "even", "--k", "0"]).returncode == 2

    def test_tol_floor_is_usage_error(self, run_betakit):
        assert run_betakit(["beta", "even", "--k", "1", "--tol", "1e-14"]).returncode == 2


class TestTableCommands:
    def test_euler_number_text(self, run_betakit):
        r = run_betakit(["euler", "--n", "4"])
        assert r.stdout == b"E_4 = 5\n"

    def test_euler_poly_text(self, run_betakit):
        r = run_betakit(["euler", "--n", "3", "--poly"])
        assert r.stdout == b"E_3(x) = x^3 - 3/2*x^2 + 1/4\n"

    def test_euler_poly_json_coefficients(self, run_betakit):
        r = run_betakit(["euler", "--n", "2", "--poly", "--format", "json"])
        assert json.loads(r.stdout) == {"n": 2, "coefficients": ["0", "-1", "1"]}

    def test_bernoulli_number(self, run_betakit):
        r = run_betakit(["bernoulli", "--n", "2", "--format", "json"])
        assert json.loads(r.stdout) == {"n": 2, "bernoulli_number": "1/6"}

    def test_bernoulli_chi4(self, run_betakit):
        r = run_betakit(["bernoulli", "--n", "3", "--chi4", "--format", "json"])
        assert json.loads(r.stdout) == {"n": 3, "chi4": "3/2"}

    def test_bernoulli_poly_and_chi4_mutually_exclusive(self, run_betakit):
        r = run_betakit(["bernoulli", "--n", "3", "--chi4", "--poly"])
        assert r.returncode == 2


class TestVerify:
    def test_passing_suite_exit_zero(self, run_betakit):
        r = run_betakit(["verify", "--nmax", "8", "--trials", "3", "--seed", "11"])
        assert r.returncode == 0
        assert r.stdout.decode().strip().endswith("all identities passed")

    def test_json_report_schema(self, run_betakit):
        r = run_betakit(
            ["verify", "--nmax", "6", "--trials", "2", "--seed", "3", "--format", "json"]
        )
        payload = json.loads(r.stdout)
        assert payload["all_passed"] is True
        for entry in payload["identities"]:
            assert set(entry) == {"identity_id", "instances", "passed", "first_failure"}

    def test_seed_changes_nothing_about_validity(self, run_betakit):
        for seed in ("1", "2"):
            assert run_betakit(["verify", "--nmax", "5", "--seed", seed]).returncode == 0


class TestTelescopeCommand:
    def test_csv_header(self, run_betakit):
        r = run_betakit(["telescope", "--family", "istar", "--k", "0", "--N", "100",
                         "--format", "csv"])
        lines = r.stdout.decode().splitlines()
        assert lines[0] == "family,k,N,S_N,target"
        assert lines[1].startswith("I_star,0,0,")

    def test_json_family_j(self, run_betakit):
        r = run_betakit(["telescope", "--family", "j", "--k", "1", "--N", "50",
                         "--format", "json"])
        payload = json.loads(r.stdout)
        assert payload["family"] == "J"
        assert payload["entries"][-1][0] == 50

    def test_family_j_needs_positive_k(self, run_betakit):
        r = run_betakit(["telescope", "--family", "j", "--k", "0", "--N", "10"])
        assert r.returncode == 2


class TestAuxCommand:
    def test_closed_and_numeric_agree(self, run_betakit):
        r = run_betakit(["aux", "--family", "i", "--k", "1", "--m", "0", "--format", "json"])
        payload = json.loads(r.stdout)
        assert payload["closed"]["coeff"] == "-2"
        assert payload["closed"]["pi_power"] == -3
        assert payload["abs_diff"] < 1e-8
        assert set(payload["numeric"]) == {"value", "abs_error_estimate", "n_evals"}

    def test_family_j(self, run_betakit):
        r = run_betakit(["aux", "--family", "j", "--k", "0", "--m", "0", "--format", "json"])
        payload = json.loads(r.stdout)
        assert payload["closed"]["coeff"] == "-1"
        assert payload["closed"]["pi_power"] == -2


class TestUsageAndErrors:
    def test_no_command(self, run_betakit):
        assert run_betakit([]).returncode == 2

    def test_unknown_command(self, run_betakit):
        assert run_betakit(["cosine"]).returncode == 2

    def test_bad_digits(self, run_betakit):
        assert run_betakit(["beta", "odd", "--k", "1", "--digits", "0"]).returncode == 2
        assert run_betakit(["beta", "odd", "--k", "1", "--digits", "1001"]).returncode == 2

    def test_help_exits_zero(self, run_betakit):
        assert run_betakit(["--help"]).returncode == 0

    def test_budget_error_maps_to_exit_3(self, monkeypatch, capsys):
        import betakit.cli as cli_mod

        def boom(*args, **kwargs):
            raise BudgetExceededError("synthetic budget failure")

        monkeypatch.setattr(cli_mod, "beta_even_quadrature", boom)
        code = run_cli(["beta", "even", "--k", "1"])
        captured = capsys.readouterr()
        assert code == 3
        assert "numeric budget exceeded" in captured.err


class TestRunCliInProcess:
    def test_returns_exit_code_instead_of_raising(self, capsys):
        assert run_cli(["beta", "odd", "--k", "2", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["coeff"] == "5/1536"

    def test_usage_error_in_process(self, capsys):
        assert run_cli(["beta", "odd"]) == 2
