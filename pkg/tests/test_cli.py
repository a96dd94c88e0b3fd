import json
import math

import pytest

from ncgauss.cli import main
from ncgauss.sweep import CSV_HEADER


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def report_value(out, key):
    for line in out.splitlines():
        parts = line.split()
        if parts and parts[0] == key:
            return parts[1]
    raise AssertionError(f"key {key} not found in output:\n{out}")


class TestClassify:
    def test_vacuum(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--family", "1", "--theta", "0",
                               "--eta", "0", "--m", "0", "--n", "0")
        assert code == 0
        assert report_value(out, "class") == "SEPARABLE"
        assert abs(float(report_value(out, "nu_minus")) - 1.0) <= 1e-12
        assert abs(float(report_value(out, "nu_minus_prime")) - 1.0) <= 1e-12

    def test_half_radius_commutative(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--family", "1", "--theta", "0",
                               "--eta", "0", "--m", "0.05", "--n", "0.4975")
        assert code == 0
        assert report_value(out, "class") == "SEPARABLE"
        assert abs(float(report_value(out, "R")) - 0.5) <= 1e-4
        assert abs(float(report_value(out, "nu_minus_prime")) - 1.5) <= 1e-4

    def test_domain_gate_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--family", "1", "--theta", "2",
                               "--eta", "1", "--m", "0", "--n", "0")
        assert code == 2
        assert "theta*eta must be < 1" in err

    def test_radius_gate_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--m", "0.9", "--n", "0.9")
        assert code == 2
        assert "must be < 1" in err

    def test_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--theta", "0.125", "--eta", "0.25",
                               "--m", "0.05", "--n", "0.49749371855331", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["class"] == "SEPARABLE"
        assert set(payload) >= {"theta", "eta", "R", "b", "nu_minus", "nu_minus_prime"}


class TestSpectrum:
    def test_vacuum_spectrum(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--m", "0", "--n", "0")
        assert code == 0
        values = [float(v) for v in out.splitlines()[0].split()[1:]]
        assert len(values) == 4
        assert all(abs(v - 1.0) <= 1e-12 for v in values)

    def test_transposed_half_radius(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--family", "1", "--m", "0.05",
                               "--n", "0.49749371855331", "--transposed")
        assert code == 0
        smallest = float(out.splitlines()[0].split()[1])
        assert abs(smallest - 1.5) <= 1e-6

    def test_reference_point_matches_closed_form(self, capsys):
        from ncgauss.algebra import NCParams
        from ncgauss.states import StateParams, closed_form_invariants_family1

        split = StateParams.standard_split(0.5)
        code, out, _ = run_cli(capsys, "spectrum", "--theta", "0.125", "--eta", "0.25",
                               "--m", repr(split.m), "--n", repr(split.n_corr), "--json")
        assert code == 0
        payload = json.loads(out)
        expected = closed_form_invariants_family1(NCParams(0.125, 0.25), split.m, split.n_corr)[0]
        assert abs(payload["spectrum"][0] - expected) <= 1e-9 * expected


class TestSweep:
    def test_explicit_ranges(self, capsys, tmp_path):
        out_path = tmp_path / "grid.csv"
        code, out, _ = run_cli(capsys, "sweep", "--family", "1", "--m", "0.05",
                               "--n", "0.49749371855331", "--theta-range", "0:0.25:2",
                               "--eta-range", "0:0.25:2", "--out", str(out_path))
        assert code == 0
        assert str(out_path) in out
        lines = out_path.read_text().strip().split("\n")
        assert lines[0] == CSV_HEADER
        assert len(lines) == 5

    def test_jobs_do_not_change_bytes(self, capsys, tmp_path):
        args = ["sweep", "--family", "2", "--m", "0.02", "--n", "0.19899748742132398",
                "--theta-range", "0:0.6:13", "--eta-range", "0:0.6:11"]
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run_cli(capsys, *args, "--out", str(first))[0] == 0
        assert run_cli(capsys, *args, "--out", str(second), "--jobs", "4")[0] == 0
        assert first.read_bytes() == second.read_bytes()

    def test_preset_writes_directory(self, capsys, tmp_path):
        out_dir = tmp_path / "curves"
        code, out, _ = run_cli(capsys, "sweep", "--preset", "fig1", "--out", str(out_dir))
        assert code == 0
        written = sorted(p.name for p in out_dir.glob("*.csv"))
        assert written == sorted([
            "fig1_theta_0.csv", "fig1_theta_0.125.csv", "fig1_theta_0.25.csv",
            "fig1_eta_0.csv", "fig1_eta_0.125.csv", "fig1_eta_0.25.csv",
        ])
        assert len(out.strip().splitlines()) == 6
        body = (out_dir / "fig1_theta_0.125.csv").read_text().strip().split("\n")[1:]
        assert len(body) == 241
        assert all(line.split(",")[0] == "0.125" for line in body)

    def test_missing_ranges(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "sweep", "--m", "0", "--n", "0",
                               "--out", str(tmp_path / "x.csv"))
        assert code == 2
        assert "preset" in err

    def test_io_error_exit_code(self, capsys, tmp_path):
        target = tmp_path / "missing" / "grid.csv"
        code, _, err = run_cli(capsys, "sweep", "--m", "0", "--n", "0",
                               "--theta-range", "0:0.2:2", "--eta-range", "0:0.2:2",
                               "--out", str(target))
        assert code == 4
        assert "i/o error" in err

    def test_malformed_range(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "sweep", "--m", "0", "--n", "0",
                               "--theta-range", "0:0.2", "--eta-range", "0:0.2:2",
                               "--out", str(tmp_path / "x.csv"))
        assert code == 2
        assert "MIN:MAX:STEPS" in err
