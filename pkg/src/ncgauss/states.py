"""The two Gaussian covariance families and their closed-form invariants."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import NCParams, _frozen
from .errors import DomainError, NotPositiveDefinite, NumericalError, ShapeError

RADICAND_TOL = 1e-12


class GammaFamily(enum.IntEnum):
    FAMILY_1 = 1
    FAMILY_2 = 2


@dataclass(frozen=True)
class StateParams:
    """Correlation parameters (m, n_corr) with R = hypot(m, n_corr) < 1.

    R is always derived, never accepted directly, so (m, n_corr, R, b) stay
    consistent by construction.
    """

    m: float
    n_corr: float
    R: float = field(init=False)
    b: float = field(init=False)

    def __post_init__(self) -> None:
        m, n = float(self.m), float(self.n_corr)
        if not (math.isfinite(m) and math.isfinite(n)):
            raise DomainError("m and n_corr must be finite")
        r = math.hypot(m, n)
        if r >= 1.0:
            raise DomainError(f"R = sqrt(m^2 + n_corr^2) must be < 1 (got {r})")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n_corr", n)
        object.__setattr__(self, "R", r)
        object.__setattr__(self, "b", (1.0 + r) / (1.0 - r))

    @classmethod
    def standard_split(cls, radius: float) -> "StateParams":
        """Figure split m = R/10, n = 3*sqrt(11)*R/10 (so hypot gives back R)."""
        return cls(radius / 10.0, 3.0 * math.sqrt(11.0) * radius / 10.0)

    @classmethod
    def swapped_split(cls, radius: float) -> "StateParams":
        """Same as standard_split with the roles of m and n exchanged."""
        return cls(3.0 * math.sqrt(11.0) * radius / 10.0, radius / 10.0)


@dataclass(frozen=True)
class CovarianceMatrix:
    """Symmetric positive-definite covariance matrix with family provenance."""

    entries: np.ndarray
    family: GammaFamily | None = None
    params: StateParams | None = None

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ShapeError(f"covariance matrix must be square, got shape {entries.shape}")
        scale = max(1.0, float(np.abs(entries).max()))
        if float(np.abs(entries - entries.T).max()) > 1e-12 * scale:
            raise ShapeError("covariance matrix must be symmetric")
        eigenvalues = np.linalg.eigvalsh(entries)
        if eigenvalues[0] <= 0.0:
            raise NotPositiveDefinite(f"smallest eigenvalue {eigenvalues[0]} is not positive")
        object.__setattr__(self, "entries", _frozen(entries))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def build_gamma(family: GammaFamily, m: float, n_corr: float) -> np.ndarray:
    """Cross-covariance block of the chosen family; satisfies gamma gamma^T = R^2 I."""
    m, n = float(m), float(n_corr)
    if not (math.isfinite(m) and math.isfinite(n)):
        raise DomainError("m and n_corr must be finite")
    if GammaFamily(family) is GammaFamily.FAMILY_1:
        return np.array([
            [n, 0.0, m, 0.0],
            [0.0, n, 0.0, -m],
            [m, 0.0, -n, 0.0],
            [0.0, -m, 0.0, -n],
        ])
    return np.array([
        [n, 0.0, 0.0, -m],
        [0.0, n, m, 0.0],
        [0.0, m, -n, 0.0],
        [-m, 0.0, 0.0, -n],
    ])


def build_covariance(family: GammaFamily, m: float, n_corr: float) -> CovarianceMatrix:
    """Covariance (b/2) [[I, gamma^T], [gamma, I]] with b = (1+R)/(1-R)."""
    params = StateParams(m, n_corr)
    gamma = build_gamma(family, m, n_corr)
    eye4 = np.eye(4)
    entries = (params.b / 2.0) * np.block([[eye4, gamma.T], [gamma, eye4]])
    return CovarianceMatrix(entries, GammaFamily(family), params)


def _omega_plus(theta: float, eta: float, m: float, n: float) -> float:
    return (2.0 * (1.0 + n * n)
            + (1.0 - n * n) * (eta * eta + theta * theta)
            + 2.0 * m * m * (1.0 + eta * theta)
            + 4.0 * m * (eta + theta))


def _omega_minus(theta: float, eta: float, m: float, n: float) -> float:
    return (2.0 * (1.0 - n * n)
            + (1.0 + n * n) * (eta * eta + theta * theta)
            - 2.0 * m * m * (1.0 + eta * theta)
            + 2.0 * n * abs(eta * eta - theta * theta))


def closed_form_invariants_family1(params: NCParams, m: float, n_corr: float) -> tuple[float, float]:
    """Smallest invariants (nu_minus, nu_minus_prime) of the family-1 state.

    The two branch polynomials are kept as separate functions because their
    surviving terms differ structurally.  The spectrum is even in m and in
    n_corr separately (checked against the eigensolver), while the branch
    polynomials are written for the nonnegative quadrant, so absolute values
    are taken up front.
    """
    state = StateParams(m, n_corr)
    m_abs, n_abs = abs(state.m), abs(state.n_corr)
    r = state.R
    c = 1.0 - params.eta * params.theta
    prefactor = (1.0 + r) / ((1.0 - r) * c)
    target = (1.0 - r * r) ** 2 * c * c

    def smallest(w: float) -> float:
        radicand = w * w / 4.0 - target
        if radicand < -RADICAND_TOL:
            raise NumericalError(f"inner radicand {radicand} below tolerance -{RADICAND_TOL}")
        radicand = max(radicand, 0.0)
        # conjugate form of w/2 - sqrt(w^2/4 - target): immune to cancellation
        inner = target / (w / 2.0 + math.sqrt(radicand))
        return prefactor * math.sqrt(inner)

    return (smallest(_omega_minus(params.theta, params.eta, m_abs, n_abs)),
            smallest(_omega_plus(params.theta, params.eta, m_abs, n_abs)))


def wigner_value(sigma, z) -> float:
    """Gaussian phase-space function exp(-z^T Sigma^{-1} z) / (pi^n sqrt(det Sigma))."""
    entries = np.asarray(sigma, dtype=float)
    vec = np.asarray(z, dtype=float).reshape(-1)
    if vec.size != entries.shape[0]:
        raise ShapeError(f"point has dimension {vec.size}, covariance is {entries.shape[0]}-dimensional")
    modes = entries.shape[0] // 2
    sign, logdet = np.linalg.slogdet(entries)
    if sign <= 0:
        raise NotPositiveDefinite("covariance determinant is not positive")
    quad = float(vec @ np.linalg.solve(entries, vec))
    return math.exp(-quad - 0.5 * logdet) / math.pi ** modes
