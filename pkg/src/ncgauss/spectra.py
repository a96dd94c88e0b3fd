"""Deformed Williamson spectra and the quantumness/separability classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDefinite, PairingError, ShapeError, SingularStructure

PAIRING_TOL = 1e-8  # relative; ~100x the observed pairing defect on 8x8 problems
EIGENVALUE_FLOOR = 1e-13  # times trace, for the positive-definiteness gate


class Classification(enum.Enum):
    NONPHYSICAL = "NONPHYSICAL"
    SEPARABLE = "SEPARABLE"
    ENTANGLED = "ENTANGLED"


@dataclass(frozen=True)
class SymplecticSpectrum:
    """Positive half of the spectrum of 2i Omega^{-1} Sigma, sorted ascending."""

    values: tuple[float, ...]
    residual: float

    def __post_init__(self) -> None:
        if any(v <= 0.0 for v in self.values):
            raise PairingError(f"spectrum values must be positive, got {self.values}")
        if list(self.values) != sorted(self.values):
            raise PairingError("spectrum values must be sorted ascending")

    @property
    def nu_minus(self) -> float:
        return self.values[0]


@dataclass(frozen=True)
class StateClass:
    tag: Classification
    nu_minus: float
    nu_minus_prime: float


def sqrt_spd(matrix: np.ndarray) -> np.ndarray:
    """Symmetric square root via spectral decomposition, with a positivity gate."""
    w, v = np.linalg.eigh(matrix)
    if w[0] <= EIGENVALUE_FLOOR * float(np.trace(matrix)):
        raise NotPositiveDefinite(f"smallest eigenvalue {w[0]} fails the positivity floor")
    return (v * np.sqrt(w)) @ v.T


def _inverse_structure(omega: np.ndarray) -> np.ndarray:
    try:
        inv = np.linalg.inv(omega)
    except np.linalg.LinAlgError as exc:
        raise SingularStructure("structure matrix is singular") from exc
    if not np.isfinite(inv).all():
        raise SingularStructure("structure matrix is numerically singular")
    return inv


def paired_eigenvalues(root: np.ndarray, omega_inv: np.ndarray) -> tuple[np.ndarray, float]:
    """Eigenvalues of 2i K with K = root @ omega_inv @ root, plus the pairing defect.

    K is real skew-symmetric, so 2iK is Hermitian with an exactly +/- paired
    real spectrum; eigvalsh keeps the computation stable and deterministic.
    """
    k = root @ omega_inv @ root
    eigenvalues = np.linalg.eigvalsh(2j * k)
    residual = float(np.abs(eigenvalues + eigenvalues[::-1]).max())
    top = float(np.abs(eigenvalues).max())
    if residual > PAIRING_TOL * top:
        raise PairingError(f"pairing defect {residual} exceeds {PAIRING_TOL} * {top}")
    return eigenvalues, residual


def nc_williamson_spectrum(sigma, omega) -> SymplecticSpectrum:
    """Positive eigenvalues of 2i Omega^{-1} Sigma, ascending.

    Route: form Sigma^{1/2} by symmetric eigendecomposition, then diagonalize
    the Hermitian matrix 2i Sigma^{1/2} Omega^{-1} Sigma^{1/2}, which is
    similar to 2i Omega^{-1} Sigma but has a guaranteed real, paired spectrum.
    """
    sig = np.asarray(sigma, dtype=float)
    om = np.asarray(omega, dtype=float)
    if sig.ndim != 2 or sig.shape[0] != sig.shape[1]:
        raise ShapeError(f"covariance matrix must be square, got {sig.shape}")
    if om.shape != sig.shape:
        raise ShapeError(f"structure shape {om.shape} does not match covariance shape {sig.shape}")
    root = sqrt_spd(sig)
    eigenvalues, residual = paired_eigenvalues(root, _inverse_structure(om))
    half = eigenvalues.size // 2
    return SymplecticSpectrum(tuple(float(v) for v in eigenvalues[half:]), residual)


def rsup_holds(sigma, omega) -> bool:
    """Uncertainty-principle test: smallest invariant at least 1 (inclusive)."""
    return nc_williamson_spectrum(sigma, omega).nu_minus >= 1.0


def min_uncertainty_eigenvalue(sigma, omega) -> float:
    """Smallest eigenvalue of the Hermitian matrix Sigma + (i/2) Omega.

    Independent route to the uncertainty test: nonnegative (within rounding)
    exactly when nu_minus >= 1.
    """
    sig = np.asarray(sigma, dtype=float)
    om = np.asarray(omega, dtype=float)
    return float(np.linalg.eigvalsh(sig + 0.5j * om)[0])


def classify(sigma, omega, omega_prime) -> StateClass:
    """Three-way verdict from nu_minus of (Sigma, Omega) and (Sigma, Omega').

    Comparisons are exact (>= 1, no epsilon); the raw invariants are returned
    alongside so callers can re-threshold.
    """
    nu = nc_williamson_spectrum(sigma, omega).nu_minus
    nu_prime = nc_williamson_spectrum(sigma, omega_prime).nu_minus
    if nu < 1.0:
        tag = Classification.NONPHYSICAL
    elif nu_prime >= 1.0:
        tag = Classification.SEPARABLE
    else:
        tag = Classification.ENTANGLED
    return StateClass(tag, nu, nu_prime)
