"""Generalized hypergeometric (coherent) states.

Numerical toolkit for states whose normalization function is a generalized
hypergeometric series: parameter validation and convergence domains,
truncated Fock representations, ladder operators, photon number statistics,
resolution-of-unity weight functions with moment verification, Husimi and
phase distributions, and analytic (Bargmann/Hardy) representations.
"""

from .errors import (
    CircleNoGoError,
    ConvergenceError,
    DivergenceError,
    GHSError,
    ParameterError,
    PoleError,
)
from .ladder import (
    LadderCoefficients,
    apply_lowering,
    apply_raising,
    commutator_diagonal,
    eigenvalue_residual,
    f_coeff,
    hermitian_matrices,
)
from .photstat import (
    DistributionSeries,
    PhotonStats,
    closed_form_stats,
    factorial_moment,
    mean_and_mandel,
    pn_distribution,
)
from .phase import (
    GCoefficientTable,
    PhaseDistribution,
    default_theta_grid,
    g_coefficients,
    gh_husimi,
    husimi_q,
    phase_distribution,
    radial_phase_check,
    self_dual_husimi,
)
from .analytic import (
    AnalyticSample,
    analytic_rep,
    ghcs_wavefunction,
    inner_product_via_measure,
)
from .specfun import (
    SeriesResult,
    bessel_i,
    bessel_k,
    gauss_2f1,
    kummer_m,
    ln_gamma,
    pfq,
    pochhammer,
    tricomi_u,
)
from .states import (
    DomainClass,
    DomainKind,
    FockVector,
    ParameterSet,
    StateSpec,
    classify,
    coalesce,
    fock_basis_vector,
    fock_from_coeffs,
    fock_vector,
    normalization,
    overlap,
    rho,
    validate,
)
from .weights import (
    MomentReport,
    circle_weight_attempt,
    moment_check,
    positivity_scan,
    weight,
    weight_tilde,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticSample", "CircleNoGoError", "ConvergenceError", "DistributionSeries",
    "DivergenceError", "DomainClass", "DomainKind", "FockVector",
    "GCoefficientTable", "GHSError", "LadderCoefficients", "MomentReport",
    "ParameterError", "ParameterSet", "PhaseDistribution", "PhotonStats",
    "PoleError", "SeriesResult", "StateSpec", "analytic_rep", "apply_lowering",
    "apply_raising", "bessel_i", "bessel_k", "circle_weight_attempt", "classify",
    "closed_form_stats", "coalesce", "commutator_diagonal", "default_theta_grid",
    "eigenvalue_residual", "f_coeff", "factorial_moment", "fock_basis_vector",
    "fock_from_coeffs", "fock_vector", "g_coefficients", "gauss_2f1",
    "gh_husimi", "ghcs_wavefunction", "hermitian_matrices", "husimi_q",
    "inner_product_via_measure", "kummer_m", "ln_gamma", "mean_and_mandel",
    "moment_check", "normalization", "overlap", "pfq", "phase_distribution",
    "pn_distribution", "pochhammer", "positivity_scan", "radial_phase_check",
    "rho", "self_dual_husimi", "tricomi_u", "validate", "weight", "weight_tilde",
]
