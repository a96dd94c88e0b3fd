"""Gaussian-state quantumness, separability and entanglement on a deformed phase space."""

from .algebra import (
    DarbouxMap,
    MatrixKind,
    ModeLayout,
    NCParams,
    StructureMatrix,
    build_darboux,
    build_omega,
    ppt_reflection,
    standard_symplectic,
    transform_covariance,
    transform_omega_ppt,
)
from .errors import (
    DomainError,
    KindError,
    NcGaussError,
    NotPositiveDefinite,
    NumericalError,
    PairingError,
    ShapeError,
    SingularMapError,
    SingularStructure,
)
from .spectra import (
    Classification,
    StateClass,
    SymplecticSpectrum,
    classify,
    min_uncertainty_eigenvalue,
    nc_williamson_spectrum,
    rsup_holds,
)
from .states import (
    CovarianceMatrix,
    GammaFamily,
    StateParams,
    build_covariance,
    build_gamma,
    closed_form_invariants_family1,
    wigner_value,
)
from .sweep import SweepRow, SweepSpec, run_sweep, sweep_to_csv, write_csv

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "CovarianceMatrix",
    "DarbouxMap",
    "DomainError",
    "GammaFamily",
    "KindError",
    "MatrixKind",
    "ModeLayout",
    "NCParams",
    "NcGaussError",
    "NotPositiveDefinite",
    "NumericalError",
    "PairingError",
    "ShapeError",
    "SingularMapError",
    "SingularStructure",
    "StateClass",
    "StateParams",
    "StructureMatrix",
    "SweepRow",
    "SweepSpec",
    "SymplecticSpectrum",
    "build_covariance",
    "build_darboux",
    "build_gamma",
    "build_omega",
    "classify",
    "closed_form_invariants_family1",
    "min_uncertainty_eigenvalue",
    "nc_williamson_spectrum",
    "ppt_reflection",
    "rsup_holds",
    "run_sweep",
    "standard_symplectic",
    "sweep_to_csv",
    "transform_covariance",
    "transform_omega_ppt",
    "wigner_value",
    "write_csv",
]
