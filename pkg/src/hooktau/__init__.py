"""Hook-length word measures, Hankel tau functions, and residual checks.

The package is organized bottom-up: exact combinatorics feeds exact
measures, an arbitrary-precision tau layer provides the analytic side,
the equation layer ties the two together through residual checks, and
the asymptotics layer turns limit statements into convergence tables.
"""

from .combinatorics import (
    I_K_BRUTE_FORCE_BOUND,
    Partition,
    conjugate,
    count_standard,
    d1,
    enumerate_partitions,
    hook_length,
    hook_product,
    i_k,
    iter_words,
    pochhammer_symbol,
    rising_factorial,
    rsk_shape,
    schur_at_ones,
    strip_hook_product,
)
from .measures import (
    LimitConstant,
    SeriesIdentityReport,
    StripFunctionalParams,
    cauchy_identity_check,
    chi2_moment,
    generating_series_identity,
    hypergeom_2f1_series,
    limit_constant,
    poisson_truncation_bound,
    poissonized_measure,
    strip_expectation,
    word_measure,
)
from .tau import (
    GaussianMassReport,
    SelbergMeanReport,
    TauEvaluator,
    WeightSpec,
    default_precision,
    gaussian_hankel_mass,
    gaussian_vandermonde_mass,
    hermitian_ratio,
    matrix_integral_h,
    matrix_integral_k,
    selberg_aomoto_mean,
    shifted_gaussian_evaluator,
    unit_interval_evaluator,
)
from .painleve import (
    FirstIntegralReport,
    OdeResidualSpec,
    ResidualReport,
    SampledFunction,
    USeriesReport,
    VirasoroReport,
    cosgrove_delta,
    first_integral_consistency,
    kp_residual_check,
    piv_polynomials,
    pv_candidate_f,
    pv_polynomials,
    pvk_polynomials,
    residual,
    sample_function,
    sample_matrix_integral_h,
    sample_matrix_integral_k,
    u_from_generating_series,
    virasoro_locus_check,
)
from .asymptotics import (
    ConvergenceStudy,
    ScalingReport,
    StirlingReport,
    SweepReport,
    chi2_limit_study,
    density_limit_point,
    density_limit_study,
    event_identity_sweep,
    poissonized_ratio_study,
    row_tail_study,
    row_tail_word_check,
    scaling_limit_check,
    stirling_factors,
)
from . import errors

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
