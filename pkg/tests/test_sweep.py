import math

import numpy as np
import pytest

from ncgauss.errors import DomainError
from ncgauss.presets import PRESET_NAMES, figure_preset
from ncgauss.states import GammaFamily, StateParams
from ncgauss.sweep import CSV_HEADER, OUT_OF_DOMAIN, SweepSpec, format_csv, run_sweep, sweep_to_csv

SPLIT = StateParams.standard_split(0.5)


def small_spec(**overrides):
    keywords = dict(
        family=GammaFamily.FAMILY_1, m=SPLIT.m, n_corr=SPLIT.n_corr,
        theta_min=0.0, theta_max=0.25, steps_theta=2,
        eta_min=0.0, eta_max=0.25, steps_eta=2,
    )
    keywords.update(overrides)
    return SweepSpec(**keywords)


class TestSweepSpec:
    def test_rejects_bad_axes(self):
        with pytest.raises(DomainError):
            small_spec(steps_theta=0)
        with pytest.raises(DomainError):
            small_spec(theta_min=0.5, theta_max=0.25)
        with pytest.raises(DomainError):
            small_spec(theta_min=-0.1)
        with pytest.raises(DomainError):
            small_spec(steps_theta=1)  # single step needs min == max

    def test_line_scan_axis(self):
        spec = small_spec(theta_min=0.125, theta_max=0.125, steps_theta=1)
        np.testing.assert_array_equal(spec.thetas, [0.125])

    def test_rejects_invalid_state(self):
        with pytest.raises(DomainError):
            small_spec(m=0.9, n_corr=0.9)


class TestRunSweep:
    def test_two_by_two_grid(self):
        rows = run_sweep(small_spec())
        assert len(rows) == 4
        assert (rows[0].theta, rows[0].eta) == (0.0, 0.0)
        assert rows[0].label == "SEPARABLE"
        # theta-outer ordering
        assert [(r.theta, r.eta) for r in rows] == [(0.0, 0.0), (0.0, 0.25), (0.25, 0.0), (0.25, 0.25)]

    def test_out_of_domain_rows_carry_nan(self):
        spec = small_spec(theta_max=1.5, eta_max=1.5)
        rows = run_sweep(spec)
        beyond = [r for r in rows if r.theta * r.eta >= 1.0]
        assert beyond and all(r.label == OUT_OF_DOMAIN for r in beyond)
        assert all(math.isnan(r.nu_minus) and math.isnan(r.nu_minus_prime) for r in beyond)
        inside = [r for r in rows if r.theta * r.eta < 1.0]
        assert all(not math.isnan(r.nu_minus) for r in inside)

    def test_rows_match_single_point_classification(self):
        from ncgauss.algebra import NCParams, build_omega, transform_omega_ppt
        from ncgauss.spectra import classify
        from ncgauss.states import build_covariance

        spec = small_spec(theta_max=0.5, steps_theta=3, eta_max=0.5, steps_eta=3)
        cov = build_covariance(spec.family, spec.m, spec.n_corr)
        for row in run_sweep(spec):
            omega = build_omega(NCParams(row.theta, row.eta))
            verdict = classify(cov, omega, transform_omega_ppt(omega))
            assert row.label == verdict.tag.value
            assert abs(row.nu_minus - verdict.nu_minus) <= 1e-12
            assert abs(row.nu_minus_prime - verdict.nu_minus_prime) <= 1e-12


class TestCsv:
    def test_schema(self, tmp_path):
        path = tmp_path / "grid.csv"
        rows = sweep_to_csv(small_spec(theta_max=1.5, eta_max=1.5), path)
        text = path.read_bytes().decode("ascii")
        lines = text.split("\n")
        assert lines[0] == CSV_HEADER
        assert text.endswith("\n") and "\r" not in text
        assert len(lines) == len(rows) + 2  # header + rows + trailing newline

    def test_floats_round_trip_and_classes_recompute(self, tmp_path):
        path = tmp_path / "grid.csv"
        rows = sweep_to_csv(small_spec(theta_max=1.3, steps_theta=7, eta_max=1.3, steps_eta=5), path)
        body = path.read_text().strip().split("\n")[1:]
        assert len(body) == len(rows)
        for line, row in zip(body, rows):
            theta, eta, nu, nu_prime, label = line.split(",")
            assert float(theta) == row.theta
            assert float(eta) == row.eta
            assert (float(nu) == row.nu_minus) or (math.isnan(float(nu)) and math.isnan(row.nu_minus))
            # the class column must be recomputable from the nu columns
            if math.isnan(float(nu)):
                assert label == OUT_OF_DOMAIN
            elif float(nu) < 1.0:
                assert label == "NONPHYSICAL"
            elif float(nu_prime) >= 1.0:
                assert label == "SEPARABLE"
            else:
                assert label == "ENTANGLED"

    def test_serial_and_parallel_bytes_identical(self):
        spec = small_spec(theta_max=1.2, steps_theta=31, eta_max=1.2, steps_eta=29)
        serial = format_csv(run_sweep(spec, jobs=1))
        again = format_csv(run_sweep(spec, jobs=1))
        threaded = format_csv(run_sweep(spec, jobs=3))
        assert serial == again == threaded


class TestPresets:
    def test_names(self):
        assert PRESET_NAMES == ("fig1", "fig2", "fig3", "fig4")
        with pytest.raises(ValueError):
            figure_preset("fig9")

    def test_curve_presets_are_line_scans(self):
        sweeps = figure_preset("fig1")
        assert len(sweeps) == 6
        assert all(s.spec.family is GammaFamily.FAMILY_1 for s in sweeps)
        fixed_theta = [s for s in sweeps if s.spec.steps_theta == 1]
        fixed_eta = [s for s in sweeps if s.spec.steps_eta == 1]
        assert len(fixed_theta) == 3 and len(fixed_eta) == 3
        assert sorted(s.spec.theta_min for s in fixed_theta) == [0.0, 0.125, 0.25]
        assert {s.stem for s in sweeps} == {
            "fig1_theta_0", "fig1_theta_0.125", "fig1_theta_0.25",
            "fig1_eta_0", "fig1_eta_0.125", "fig1_eta_0.25",
        }

    def test_region_presets_cover_radii_and_splits(self):
        sweeps = figure_preset("fig4")
        assert len(sweeps) == 6
        assert all(s.spec.family is GammaFamily.FAMILY_2 for s in sweeps)
        assert all(s.spec.steps_theta == s.spec.steps_eta == 241 for s in sweeps)
        radii = sorted({round(math.hypot(s.spec.m, s.spec.n_corr), 12) for s in sweeps})
        assert radii == [0.1, 0.2, 0.5]
        assert {s.stem.rsplit("_", 1)[-1] for s in sweeps} == {"mn", "nm"}
