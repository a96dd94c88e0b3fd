"""Structure matrices of the deformed two-party phase-space algebra.

Conventions, fixed here and used everywhere else:

* coordinates are ordered (x1, x2, p1, p2) within a party, party A before B;
* the antisymmetric symbol has eps[0, 1] = +1;
* hbar = 1; the deformations theta (position sector) and eta (momentum
  sector) are dimensionless and enter the commutator matrix as theta*eps
  and eta*eps.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, KindError, ShapeError, SingularMapError

EPS2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


class MatrixKind(enum.Enum):
    OMEGA = "OMEGA"
    J = "J"
    OMEGA_PRIME = "OMEGA_PRIME"


def _frozen(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class NCParams:
    """Deformation pair (theta, eta); both nonnegative with theta*eta < 1."""

    theta: float
    eta: float

    def __post_init__(self) -> None:
        theta, eta = float(self.theta), float(self.eta)
        if not (math.isfinite(theta) and math.isfinite(eta)):
            raise DomainError("theta and eta must be finite")
        if theta < 0.0 or eta < 0.0:
            raise DomainError("theta and eta must be nonnegative")
        if theta * eta >= 1.0:
            raise DomainError(f"theta*eta must be < 1 (got {theta * eta})")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "eta", eta)


@dataclass(frozen=True)
class ModeLayout:
    """Mode counts (n_a, n_b) of the two parties. Phase-space dim is 2(n_a+n_b)."""

    n_a: int = 2
    n_b: int = 2

    def __post_init__(self) -> None:
        if self.n_a < 1 or self.n_b < 1 or self.n_a != int(self.n_a) or self.n_b != int(self.n_b):
            raise ShapeError(f"mode counts must be positive integers, got ({self.n_a}, {self.n_b})")

    @property
    def dim_a(self) -> int:
        return 2 * self.n_a

    @property
    def dim_b(self) -> int:
        return 2 * self.n_b

    @property
    def dim(self) -> int:
        return self.dim_a + self.dim_b


DEFAULT_LAYOUT = ModeLayout(2, 2)


@dataclass(frozen=True)
class StructureMatrix:
    """Real skew-symmetric invertible commutator matrix, block-diagonal over A/B."""

    entries: np.ndarray
    kind: MatrixKind
    layout: ModeLayout = DEFAULT_LAYOUT

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _frozen(self.entries))
        if self.entries.shape != (self.layout.dim, self.layout.dim):
            raise ShapeError(f"expected {self.layout.dim}x{self.layout.dim} entries, got {self.entries.shape}")

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)

    @property
    def block_a(self) -> np.ndarray:
        d = self.layout.dim_a
        return self.entries[:d, :d]

    @property
    def block_b(self) -> np.ndarray:
        d = self.layout.dim_a
        return self.entries[d:, d:]


@dataclass(frozen=True)
class DarbouxMap:
    """Linear map S with S J S^T = Omega, block-diagonal with equal party blocks."""

    entries: np.ndarray
    lam: float
    mu: float
    layout: ModeLayout = DEFAULT_LAYOUT

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _frozen(self.entries))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)

    @property
    def block_b(self) -> np.ndarray:
        d = self.layout.dim_a
        return self.entries[d:, d:]


def _two_block_diag(block_a: np.ndarray, block_b: np.ndarray) -> np.ndarray:
    da, db = block_a.shape[0], block_b.shape[0]
    out = np.zeros((da + db, da + db))
    out[:da, :da] = block_a
    out[da:, da:] = block_b
    return out


def standard_symplectic(layout: ModeLayout = DEFAULT_LAYOUT) -> StructureMatrix:
    """Undeformed symplectic matrix J = Diag[J_A, J_B], each block [[0, I], [-I, 0]]."""

    def block(n: int) -> np.ndarray:
        blk = np.zeros((2 * n, 2 * n))
        blk[:n, n:] = np.eye(n)
        blk[n:, :n] = -np.eye(n)
        return blk

    return StructureMatrix(_two_block_diag(block(layout.n_a), block(layout.n_b)), MatrixKind.J, layout)


def _require_two_plus_two(layout: ModeLayout) -> None:
    if (layout.n_a, layout.n_b) != (2, 2):
        raise ShapeError(f"only the 2+2-mode layout is supported, got ({layout.n_a}, {layout.n_b})")


def build_omega(params: NCParams, layout: ModeLayout = DEFAULT_LAYOUT) -> StructureMatrix:
    """Commutator matrix Omega = Diag[B, B] with B = [[theta*eps, I], [-I, eta*eps]]."""
    _require_two_plus_two(layout)
    blk = np.block([[params.theta * EPS2, np.eye(2)], [-np.eye(2), params.eta * EPS2]])
    return StructureMatrix(_two_block_diag(blk, blk), MatrixKind.OMEGA, layout)


def build_darboux(params: NCParams, layout: ModeLayout = DEFAULT_LAYOUT, gauge: float = 1.0) -> DarbouxMap:
    """Map S with S J S^T = Omega for the given deformation.

    The scale split between positions and momenta is a gauge choice; only
    lam*mu = (1 + sqrt(1 - eta*theta))/2 is constrained.  The default is the
    symmetric gauge lam = mu; ``gauge`` rescales lam -> c*lam, mu -> mu/c,
    which composes S with a block-diagonal canonical transformation and must
    not change any physical output.
    """
    _require_two_plus_two(layout)
    gauge = float(gauge)
    if not (math.isfinite(gauge) and gauge > 0.0):
        raise DomainError(f"gauge factor must be positive and finite, got {gauge}")
    root = math.sqrt(0.5 * (1.0 + math.sqrt(1.0 - params.eta * params.theta)))
    lam = gauge * root
    mu = root / gauge
    t2l = params.theta / (2.0 * lam)
    e2m = params.eta / (2.0 * mu)
    # momentum-row signs are fixed by requiring S J S^T = Omega entrywise
    blk = np.array([
        [lam, 0.0, 0.0, -t2l],
        [0.0, lam, t2l, 0.0],
        [0.0, e2m, mu, 0.0],
        [-e2m, 0.0, 0.0, mu],
    ])
    return DarbouxMap(_two_block_diag(blk, blk), lam, mu, layout)


def ppt_reflection(darboux: DarbouxMap) -> np.ndarray:
    """Partial-transpose map D = Diag[I, S_B Lam_B S_B^{-1}] with Lam_B = Diag[I, -I].

    In the commuting variables D mirrors party B's momenta; D is an involution.
    """
    layout = darboux.layout
    s_b = darboux.block_b
    n = layout.n_b
    lam_b = np.diag([1.0] * n + [-1.0] * n)
    try:
        s_b_inv = np.linalg.inv(s_b)
    except np.linalg.LinAlgError as exc:
        raise SingularMapError("party-B Darboux block is singular") from exc
    if not np.isfinite(s_b_inv).all():
        raise SingularMapError("party-B Darboux block is numerically singular")
    out = np.eye(layout.dim)
    d = layout.dim_a
    out[d:, d:] = s_b @ lam_b @ s_b_inv
    return out


def transform_omega_ppt(omega: StructureMatrix) -> StructureMatrix:
    """Partial transpose at the structure level: negate the B block of Omega."""
    if omega.kind is not MatrixKind.OMEGA:
        raise KindError(f"expected an OMEGA structure matrix, got {omega.kind.value}")
    out = omega.entries.copy()
    d = omega.layout.dim_a
    out[d:, d:] = -out[d:, d:]  # sign flip is exact in floating point
    return StructureMatrix(out, MatrixKind.OMEGA_PRIME, omega.layout)


def transform_covariance(sigma, mat):
    """Congruence transform M Sigma M^T, re-symmetrized to purge rounding skew.

    Accepts a CovarianceMatrix or a plain array; returns the same kind.
    """
    entries = np.asarray(sigma, dtype=float)
    m = np.asarray(mat, dtype=float)
    if m.shape != entries.shape:
        raise ShapeError(f"map shape {m.shape} does not match covariance shape {entries.shape}")
    x = m @ entries @ m.T
    sym = 0.5 * (x + x.T)
    if isinstance(sigma, np.ndarray):
        return sym
    return dataclasses.replace(sigma, entries=sym)
