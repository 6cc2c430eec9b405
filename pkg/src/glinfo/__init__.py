"""Information and complexity measures for the normal-metal/superconductor
interface described by the Ginzburg-Landau order parameter.

The package computes Fisher information, Shannon entropy, disequilibrium,
LMC complexity and their nonextensive (Tsallis) generalizations for the
interface probability densities, validates every closed form against direct
quadrature of its defining integral, verifies the entropy decomposition
S = -1 + I1F + I2F, and cross-checks the tanh profile by solving the
nonlinear boundary value problem it satisfies.
"""

from .errors import (
    ConvergenceError,
    DivergenceWarning,
    DomainError,
    MaterialFileError,
    PoleError,
    UnknownMaterialError,
)
from .gl_bvp import BvpSolution, discrete_residual, solve_profile, verify_profile
from .gl_model import (
    Distribution,
    coherence_length,
    fisher_from_energy_ratio,
    order_parameter,
    surface_to_bulk_ratio,
    truncation_norm,
)
from .liu import LiuReport, fisher_density, liu_identity, liu_terms, shannon_density
from .materials import (
    Material,
    builtin_materials,
    load_materials,
    lookup,
    save_materials,
)
from .measures import (
    GeneralizedSet,
    MeasureSet,
    disequilibrium,
    fisher_information,
    generalized_fisher,
    generalized_set,
    measure_numeric,
    measure_set,
    measure_set_truncated,
    measures_at_temperature,
    shannon_entropy,
    truncated_disequilibrium,
    truncated_fisher_information,
    truncated_shannon_entropy,
    tsallis_entropy,
)
from .numerics import (
    QuadratureResult,
    dilog,
    gamma,
    hyp2f1_neg1,
    integrate_finite,
    integrate_semi_infinite,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "ConvergenceError",
    "DivergenceWarning",
    "DomainError",
    "MaterialFileError",
    "PoleError",
    "UnknownMaterialError",
    # numerics
    "QuadratureResult",
    "gamma",
    "hyp2f1_neg1",
    "dilog",
    "integrate_finite",
    "integrate_semi_infinite",
    # model
    "Distribution",
    "coherence_length",
    "order_parameter",
    "truncation_norm",
    "surface_to_bulk_ratio",
    "fisher_from_energy_ratio",
    # measures
    "MeasureSet",
    "GeneralizedSet",
    "shannon_entropy",
    "fisher_information",
    "disequilibrium",
    "measure_set",
    "truncated_shannon_entropy",
    "truncated_fisher_information",
    "truncated_disequilibrium",
    "measure_set_truncated",
    "measures_at_temperature",
    "tsallis_entropy",
    "generalized_fisher",
    "generalized_set",
    "measure_numeric",
    # decomposition
    "LiuReport",
    "shannon_density",
    "fisher_density",
    "liu_terms",
    "liu_identity",
    # profile check
    "BvpSolution",
    "solve_profile",
    "verify_profile",
    "discrete_residual",
    # materials
    "Material",
    "builtin_materials",
    "load_materials",
    "save_materials",
    "lookup",
]
