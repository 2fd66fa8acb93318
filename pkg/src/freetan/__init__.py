"""freetan: exact combinatorics, spectra, limit laws and random-matrix
simulations for the tangent family of free limit distributions."""

from .analysis import (
    DensityGrid,
    LevyMeasure,
    RadiusResult,
    cauchy_transform_from_density,
    density_grid,
    dottie,
    huang_v,
    levy_atom_mass_check,
    levy_atoms,
    levy_cumulant_transform,
    spectral_radius,
    spectral_radius_by_minimization,
)
from .combinatorics import (
    FormalSeries,
    IntPolynomial,
    arctangent_number,
    arctanh_number,
    bernoulli,
    derivative_polynomial,
    higher_tangent_number,
    tangent_numbers,
    tangent_polynomial,
    zigzag_numbers,
    zigzag_sum_identity,
)
from .exceptions import (
    ConsistencyError,
    DegenerateFamilyError,
    NumericError,
    PoleError,
    ResourceLimitError,
)
from .gaussian_rational import GaussianRational, to_gaussian_rational
from .laws import (
    LawParams,
    LimitCumulants,
    bp_classical_cumulant_direct,
    bp_classical_cumulants,
    finite_n_cumulants,
    finite_n_r_transform,
    limit_cumulants,
    marchenko_pastur_limit_check,
    moment_generating_limit,
    moments_of_limit,
    r_transform,
    tangent_law_cumulants,
    zigzag_law_cumulants,
)
from .partitions import (
    NCPartition,
    catalan,
    cumulants_from_moments,
    enumerate_nc,
    joins_to_top,
    limit_theorem_small_check,
    moments_from_cumulants,
    nc_pairings,
    quadratic_form_cumulants_oracle,
    semicircular_mixed_moment,
)
from .randmat import (
    EmpiricalSpectrum,
    HistogramResult,
    Permutation,
    SimConfig,
    histogram,
    pairing_expected_moment,
    sample_complex_gaussian,
    sample_gue,
    sample_stream,
    simulate_sandwich_model,
    simulate_wishart_model,
)
from .spectra import (
    StructuredMatrixSpec,
    anticommutator_spectrum,
    build,
    charpoly,
    closed_form_eigenvalues,
    cotangent_sum_2m,
    cotangent_sum_shifted,
    exact_trace_powers,
    hermitian_eigenvalues,
    newton_power_sums,
    trace_method_constants,
    trace_power,
)

__version__ = "0.1.0"
