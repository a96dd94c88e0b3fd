"""Grid sweeps over the deformation plane and their CSV serialization."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, PairingError
from .spectra import PAIRING_TOL, Classification, sqrt_spd
from .states import GammaFamily, StateParams, build_covariance

OUT_OF_DOMAIN = "OUT_OF_DOMAIN"
CSV_HEADER = "theta,eta,nu_minus,nu_minus_prime,class"
_CHUNK = 4096  # grid points per batch; fixed so results never depend on jobs


@dataclass(frozen=True)
class SweepSpec:
    """Rectangular (theta, eta) grid for one covariance family.

    An axis may degenerate to a single value (steps == 1 with min == max),
    which is how fixed-deformation line scans are expressed.
    """

    family: GammaFamily
    m: float
    n_corr: float
    theta_min: float
    theta_max: float
    steps_theta: int
    eta_min: float
    eta_max: float
    steps_eta: int

    def __post_init__(self) -> None:
        StateParams(self.m, self.n_corr)  # validates R < 1
        for name, lo, hi, steps in (
            ("theta", self.theta_min, self.theta_max, self.steps_theta),
            ("eta", self.eta_min, self.eta_max, self.steps_eta),
        ):
            if not (math.isfinite(lo) and math.isfinite(hi)) or lo < 0.0:
                raise DomainError(f"{name} range must be finite and nonnegative")
            if lo > hi:
                raise DomainError(f"{name}_min must not exceed {name}_max")
            if steps < 1 or (steps == 1 and lo != hi):
                raise DomainError(f"steps_{name} must be >= 2, or 1 with min == max")

    @property
    def thetas(self) -> np.ndarray:
        return np.linspace(self.theta_min, self.theta_max, self.steps_theta)

    @property
    def etas(self) -> np.ndarray:
        return np.linspace(self.eta_min, self.eta_max, self.steps_eta)


@dataclass(frozen=True)
class SweepRow:
    theta: float
    eta: float
    nu_minus: float
    nu_minus_prime: float
    label: str


def _stacked_omegas(thetas: np.ndarray, etas: np.ndarray) -> np.ndarray:
    out = np.zeros((thetas.size, 8, 8))
    for off in (0, 4):
        out[:, off + 0, off + 1] = thetas
        out[:, off + 1, off + 0] = -thetas
        out[:, off + 2, off + 3] = etas
        out[:, off + 3, off + 2] = -etas
        out[:, off + 0, off + 2] = 1.0
        out[:, off + 1, off + 3] = 1.0
        out[:, off + 2, off + 0] = -1.0
        out[:, off + 3, off + 1] = -1.0
    return out


def _batch_invariants(root: np.ndarray, thetas: np.ndarray, etas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Smallest plain and partially-transposed invariants for a batch of grid points."""
    omegas = _stacked_omegas(thetas, etas)
    results = []
    for primed in (False, True):
        om = omegas.copy()
        if primed:
            om[:, 4:, 4:] = -om[:, 4:, 4:]
        k = np.einsum("ij,njk,kl->nil", root, np.linalg.inv(om), root)
        eigenvalues = np.linalg.eigvalsh(2j * k)
        defect = np.abs(eigenvalues + eigenvalues[:, ::-1]).max(axis=1)
        top = np.abs(eigenvalues).max(axis=1)
        if (defect > PAIRING_TOL * top).any():
            worst = int(np.argmax(defect / top))
            raise PairingError(
                f"pairing defect {defect[worst]} at theta={thetas[worst]}, eta={etas[worst]}")
        results.append(eigenvalues[:, 4])
    return results[0], results[1]


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[SweepRow]:
    """Evaluate the grid row-major (theta outer); identical output for any jobs."""
    thetas, etas = spec.thetas, spec.etas
    grid_t = np.repeat(thetas, etas.size)
    grid_e = np.tile(etas, thetas.size)
    total = grid_t.size

    cov = build_covariance(spec.family, spec.m, spec.n_corr)
    root = sqrt_spd(cov.entries)

    nu = np.full(total, math.nan)
    nu_prime = np.full(total, math.nan)
    valid = np.flatnonzero(grid_t * grid_e < 1.0)
    chunks = [valid[i:i + _CHUNK] for i in range(0, valid.size, _CHUNK)]

    def work(chunk: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return _batch_invariants(root, grid_t[chunk], grid_e[chunk])

    if jobs > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outputs = list(pool.map(work, chunks))
    else:
        outputs = [work(chunk) for chunk in chunks]
    for chunk, (nu_chunk, nup_chunk) in zip(chunks, outputs):
        nu[chunk] = nu_chunk
        nu_prime[chunk] = nup_chunk

    rows = []
    for i in range(total):
        if math.isnan(nu[i]):
            label = OUT_OF_DOMAIN
        elif nu[i] < 1.0:
            label = Classification.NONPHYSICAL.value
        elif nu_prime[i] >= 1.0:
            label = Classification.SEPARABLE.value
        else:
            label = Classification.ENTANGLED.value
        rows.append(SweepRow(float(grid_t[i]), float(grid_e[i]), float(nu[i]), float(nu_prime[i]), label))
    return rows


def format_csv(rows: list[SweepRow]) -> bytes:
    """Deterministic CSV bytes: shortest round-trip floats, LF line ends."""
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(f"{row.theta!r},{row.eta!r},{row.nu_minus!r},{row.nu_minus_prime!r},{row.label}")
    return ("\n".join(lines) + "\n").encode("ascii")


def write_csv(rows: list[SweepRow], path: str | Path) -> None:
    Path(path).write_bytes(format_csv(rows))


def sweep_to_csv(spec: SweepSpec, path: str | Path, jobs: int = 1) -> list[SweepRow]:
    rows = run_sweep(spec, jobs=jobs)
    write_csv(rows, path)
    return rows
