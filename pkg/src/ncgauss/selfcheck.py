"""Self-contained verification suite; also the backend of `ncgauss selftest`.

Each check returns (passed, detail).  Random draws use fixed seeds so the
suite is deterministic; pass/fail lines are stable across runs (timings are
reported separately on stderr).
"""

from __future__ import annotations

import math
import sys
import tempfile
import time
from pathlib import Path
from typing import Callable

import numpy as np

from .algebra import NCParams, build_darboux, build_omega, ppt_reflection, standard_symplectic, \
    transform_covariance, transform_omega_ppt
from .presets import GRID_STEPS, AXIS_MAX
from .spectra import Classification, classify, min_uncertainty_eigenvalue, nc_williamson_spectrum, rsup_holds
from .states import GammaFamily, StateParams, build_covariance, closed_form_invariants_family1
from .sweep import SweepSpec, format_csv, run_sweep

_SPLITS = (
    lambda r: StateParams.standard_split(r),
    lambda r: StateParams.swapped_split(r),
    lambda r: StateParams(r, 0.0),
    lambda r: StateParams(0.0, r),
)


def _random_deformation(rng: np.random.Generator, high: float = 1.5, product_cap: float = 1.0) -> NCParams:
    while True:
        theta, eta = rng.uniform(0.0, high, 2)
        if theta * eta < product_cap:
            return NCParams(theta, eta)


def _random_state(rng: np.random.Generator, radius_cap: float = 0.995):
    while True:
        m, n = rng.uniform(-1.0, 1.0, 2)
        if math.hypot(m, n) < radius_cap:
            family = GammaFamily(int(rng.integers(1, 3)))
            return family, m, n


def check_commutative_limits() -> tuple[bool, str]:
    """Zero deformation reproduces the (1+R)^{3/2}/(1-R)^{1/2} and 1+R laws."""
    omega = build_omega(NCParams(0.0, 0.0))
    omega_prime = transform_omega_ppt(omega)
    worst = 0.0
    for radius in np.arange(0.1, 0.95, 0.1):
        expected_nu = (1.0 + radius) ** 1.5 / (1.0 - radius) ** 0.5
        expected_nu_prime = 1.0 + radius
        for split in _SPLITS:
            params = split(radius)
            cov = build_covariance(GammaFamily.FAMILY_1, params.m, params.n_corr)
            nu = nc_williamson_spectrum(cov, omega).nu_minus
            nu_prime = nc_williamson_spectrum(cov, omega_prime).nu_minus
            worst = max(worst, abs(nu - expected_nu), abs(nu_prime - expected_nu_prime))
    return worst <= 1e-9, f"worst |deviation| = {worst:.3e} over 9 radii x 4 splits (tol 1e-9)"


def check_zero_deformation_separability() -> tuple[bool, str]:
    """Every undeformed state with R < 1 classifies SEPARABLE."""
    omega = build_omega(NCParams(0.0, 0.0))
    omega_prime = transform_omega_ppt(omega)
    radii = list(np.arange(0.0, 0.96, 0.05)) + [0.99]
    bad = []
    for radius in radii:
        for split in _SPLITS:
            params = split(radius)
            for family in (GammaFamily.FAMILY_1, GammaFamily.FAMILY_2):
                cov = build_covariance(family, params.m, params.n_corr)
                verdict = classify(cov, omega, omega_prime)
                if verdict.tag is not Classification.SEPARABLE:
                    bad.append((family, radius, verdict.tag.value))
    n_points = len(radii) * len(_SPLITS) * 2
    return not bad, f"{n_points - len(bad)}/{n_points} grid points SEPARABLE" + (f"; failures: {bad[:3]}" if bad else "")


def check_closed_form_agreement() -> tuple[bool, str]:
    """Family-1 closed forms match the eigensolver to 1e-9 relative."""
    rng = np.random.default_rng(0x5EED03)
    worst = 0.0
    for _ in range(500):
        params = _random_deformation(rng, high=2.0)
        _, m, n = _random_state(rng)
        cov = build_covariance(GammaFamily.FAMILY_1, m, n)
        omega = build_omega(params)
        nu = nc_williamson_spectrum(cov, omega).nu_minus
        nu_prime = nc_williamson_spectrum(cov, transform_omega_ppt(omega)).nu_minus
        cf_nu, cf_nu_prime = closed_form_invariants_family1(params, m, n)
        worst = max(worst, abs(nu - cf_nu) / cf_nu, abs(nu_prime - cf_nu_prime) / cf_nu_prime)
    return worst <= 1e-9, f"worst relative error = {worst:.3e} over 500 tuples (tol 1e-9)"


def check_nc_induced_entanglement() -> tuple[bool, str]:
    """Deformation-induced entanglement on the fig1 scan at R = 1/2, theta = 1/8."""
    params = StateParams.standard_split(0.5)
    cov = build_covariance(GammaFamily.FAMILY_1, params.m, params.n_corr)
    hits = 0
    min_nu_prime, at_eta = math.inf, math.nan
    for eta in np.linspace(0.0, AXIS_MAX, 241):
        omega = build_omega(NCParams(0.125, float(eta)))
        verdict = classify(cov, omega, transform_omega_ppt(omega))
        if verdict.tag is Classification.ENTANGLED:
            hits += 1
        if verdict.nu_minus_prime < min_nu_prime:
            min_nu_prime, at_eta = verdict.nu_minus_prime, float(eta)
    return hits >= 1, (f"{hits}/241 ENTANGLED points; min nu_minus_prime = {min_nu_prime:.6f} "
                       f"at eta = {at_eta:.4f} (needs >= 1 point with nu' < 1 <= nu)")


def check_structural_identities() -> tuple[bool, str]:
    """S J S^T = Omega, D^2 = I and the B-block sign flip of Omega under D."""
    rng = np.random.default_rng(0x5EED05)
    j = standard_symplectic().entries
    eye = np.eye(8)
    worst = 0.0
    for _ in range(200):
        params = _random_deformation(rng)
        omega = build_omega(params)
        s = build_darboux(params).entries
        d = ppt_reflection(build_darboux(params))
        d_inv = np.linalg.inv(d)
        worst = max(
            worst,
            float(np.abs(s @ j @ s.T - omega.entries).max()),
            float(np.abs(d @ d - eye).max()),
            float(np.abs(d_inv @ omega.entries @ d_inv.T - transform_omega_ppt(omega).entries).max()),
        )
    return worst <= 1e-12, f"worst entrywise defect = {worst:.3e} over 200 draws (tol 1e-12)"


def check_ppt_form_equivalence() -> tuple[bool, str]:
    """Reflecting the state equals flipping the structure: identical spectra.

    The reflection D scales like 1/(1 - theta*eta), so the draws stay off the
    singular theta*eta = 1 boundary where forming D Sigma D^T loses digits.
    """
    rng = np.random.default_rng(0x5EED06)
    worst = 0.0
    for _ in range(200):
        params = _random_deformation(rng, product_cap=0.9)
        family, m, n = _random_state(rng, radius_cap=0.95)
        cov = build_covariance(family, m, n)
        omega = build_omega(params)
        reflected = transform_covariance(cov, ppt_reflection(build_darboux(params)))
        spec_reflected = nc_williamson_spectrum(reflected, omega).values
        spec_prime = nc_williamson_spectrum(cov, transform_omega_ppt(omega)).values
        worst = max(worst, max(abs(a - b) for a, b in zip(spec_reflected, spec_prime)))
    return worst <= 1e-10, (f"worst elementwise gap = {worst:.3e} over 200 draws "
                            f"with theta*eta < 0.9, R < 0.95 (tol 1e-10)")


def check_williamson_iff() -> tuple[bool, str]:
    """nu_minus >= 1 iff Sigma + (i/2) Omega is positive semidefinite."""
    rng = np.random.default_rng(0x5EED07)
    mismatches = 0
    nonphysical = 0
    for _ in range(500):
        params = _random_deformation(rng)
        family, m, n = _random_state(rng)
        sigma = build_covariance(family, m, n).entries
        if rng.random() < 0.4:
            sigma = sigma * rng.uniform(0.1, 0.95)
        omega = build_omega(params)
        by_spectrum = rsup_holds(sigma, omega)
        by_margin = min_uncertainty_eigenvalue(sigma, omega) >= -1e-10
        if by_spectrum != by_margin:
            mismatches += 1
        if not by_spectrum:
            nonphysical += 1
    return mismatches == 0, (f"{500 - mismatches}/500 agreements between the two routes "
                             f"({nonphysical} nonphysical cases exercised)")


def check_symmetry_contrast() -> tuple[bool, str]:
    """Family 1 is theta<->eta symmetric; family 2 measurably is not."""
    params1 = StateParams.standard_split(0.5)
    cov1 = build_covariance(GammaFamily.FAMILY_1, params1.m, params1.n_corr)
    points = [(t, e) for t in np.linspace(0.05, 0.6, 7) for e in np.linspace(0.05, 0.6, 7)]
    points.append((0.55, 0.05))
    worst = 0.0
    for theta, eta in points:
        for primed in (False, True):
            values = []
            for a, b in ((theta, eta), (eta, theta)):
                omega = build_omega(NCParams(a, b))
                if primed:
                    omega = transform_omega_ppt(omega)
                values.append(nc_williamson_spectrum(cov1, omega).nu_minus)
            worst = max(worst, abs(values[0] - values[1]))
    symmetric_ok = worst <= 1e-12

    cov2 = build_covariance(GammaFamily.FAMILY_2, params1.m, params1.n_corr)
    witness = []
    for theta, eta in ((0.125, 0.5), (0.5, 0.125)):
        omega = build_omega(NCParams(theta, eta))
        witness.append(nc_williamson_spectrum(cov2, transform_omega_ppt(omega)).nu_minus)
    gap = abs(witness[0] - witness[1])
    asymmetric_ok = gap > 1e-6
    return symmetric_ok and asymmetric_ok, (
        f"family-1 worst swap gap = {worst:.3e} on 50 points (tol 1e-12); "
        f"family-2 witness gap = {gap:.6f} at (theta, eta) = (1/8, 1/2) (needs > 1e-6)")


def check_family2_suppression() -> tuple[bool, str]:
    """Family 2 entangles strictly less than family 1 on the R = 1/2 region grids."""
    counts = {}
    for family in (GammaFamily.FAMILY_1, GammaFamily.FAMILY_2):
        per_split = []
        for split in (StateParams.standard_split(0.5), StateParams.swapped_split(0.5)):
            spec = SweepSpec(family, split.m, split.n_corr,
                             0.0, AXIS_MAX, GRID_STEPS, 0.0, AXIS_MAX, GRID_STEPS)
            rows = run_sweep(spec)
            per_split.append(sum(row.label == Classification.ENTANGLED.value for row in rows))
        counts[family] = per_split
    total1, total2 = sum(counts[GammaFamily.FAMILY_1]), sum(counts[GammaFamily.FAMILY_2])
    return total2 < total1, (
        f"ENTANGLED cells on 241x241 grids, (m=R/10 split, swapped split): "
        f"family 1 = {counts[GammaFamily.FAMILY_1]}, family 2 = {counts[GammaFamily.FAMILY_2]}; "
        f"needs total {total2} < {total1}")


def check_sweep_determinism() -> tuple[bool, str]:
    """Serial and parallel sweeps give byte-identical CSV, including NaN rows."""
    params = StateParams.standard_split(0.5)
    spec = SweepSpec(GammaFamily.FAMILY_1, params.m, params.n_corr,
                     0.0, 1.2, 59, 0.0, 1.2, 61)
    blobs = [format_csv(run_sweep(spec, jobs=jobs)) for jobs in (1, 1, 4)]
    with tempfile.TemporaryDirectory() as tmp:
        paths = []
        for i, blob in enumerate(blobs):
            path = Path(tmp) / f"run{i}.csv"
            path.write_bytes(blob)
            paths.append(path)
        identical = len({p.read_bytes() for p in paths}) == 1
    has_out_of_domain = b"OUT_OF_DOMAIN" in blobs[0]
    return identical and has_out_of_domain, (
        f"3 runs (serial x2, jobs=4) identical: {identical}; "
        f"out-of-domain rows present: {has_out_of_domain}")


CHECKS: tuple[tuple[int, str, Callable[[], tuple[bool, str]]], ...] = (
    (1, "commutative-limit-formulas", check_commutative_limits),
    (2, "zero-deformation-separability", check_zero_deformation_separability),
    (3, "closed-form-numeric-agreement", check_closed_form_agreement),
    (4, "nc-induced-entanglement", check_nc_induced_entanglement),
    (5, "structural-identities", check_structural_identities),
    (6, "ppt-form-equivalence", check_ppt_form_equivalence),
    (7, "williamson-iff", check_williamson_iff),
    (8, "symmetry-contrast", check_symmetry_contrast),
    (9, "family2-suppression", check_family2_suppression),
    (10, "sweep-determinism", check_sweep_determinism),
)


def run_all(out=None) -> bool:
    """Run every check; stable report on stdout, timings on stderr."""
    out = out or sys.stdout
    all_passed = True
    for number, name, fn in CHECKS:
        start = time.perf_counter()
        passed, detail = fn()
        elapsed = time.perf_counter() - start
        all_passed &= passed
        print(f"[{number:2d}] {'PASS' if passed else 'FAIL'} {name}: {detail}", file=out)
        print(f"     ({name}: {elapsed:.2f}s)", file=sys.stderr)
    print("all checks passed" if all_passed else "some checks FAILED", file=out)
    return all_passed
