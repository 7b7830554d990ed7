"""Spectra of inhomogeneous random graphs.

Samplers for kernel-driven, Chung-Lu, sociability, and soft-configuration
random graphs; empirical spectral distributions of their adjacency and
Laplacian matrices; the deterministic limit laws by two independent routes
(non-crossing-partition combinatorics and a resolvent fixed point); and
moment-level recovery of per-vertex weight distributions.
"""

from .errors import (
    AdmissibilityError,
    ConvergenceError,
    InfeasibleDegreesError,
    KernelSpecError,
    SpeclabError,
)
from .kernel import ConstantKernel, GridKernel, Kernel, KernelGrid, ProductKernel, kernel_from_dict, load_kernel
from .sampler import (
    GraphSample,
    SociabilityLaw,
    gaussian_surrogate_adjacency,
    gaussian_surrogate_laplacian,
    replicate_seed,
    sample_adjacency,
    sample_chung_lu,
    sample_sociability,
)
from .spectra import (
    ScaledMatrix,
    SpectralMeasure,
    build_laplacian,
    center_scale_adjacency,
    center_scale_laplacian,
    eigenvalues,
    levy_bound_check,
    levy_distance,
    self_normalized_scaling,
)
from .freeprob import (
    MomentSequence,
    PairPartition,
    SetPartition,
    boxtimes_semicircle_moments,
    catalan,
    enumerate_nc2,
    gaussian_moment,
    kreweras,
    mu_moments,
    nu_moments,
    recover_rho_moments,
    semicircle_moments,
)
from .stieltjes import StieltjesField, density_profile, g_transform, solve_h
from .maxent import (
    MultiplierSolution,
    connection_probabilities,
    sample_soft_config,
    solve_multipliers,
)

__version__ = "0.1.0"
