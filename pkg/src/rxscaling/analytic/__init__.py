"""Analytic evaluation of the sum spectral efficiency.

Exact integrals are evaluated by adaptive quadrature; closed forms and bounds
are evaluated directly. Every function is pure and safe to call from several
threads.

Example:
    >>> from rxscaling import NetworkConfig
    >>> from rxscaling.analytic import mrc_lower_bound, mrc_sum_se_exact, mrc_upper_bound
    >>>
    >>> cfg = NetworkConfig(density=1e-4, n_rx=4, noise_power_mw=0.0)
    >>> exact = mrc_sum_se_exact(cfg)
    >>> mrc_lower_bound(cfg).value <= exact.value <= mrc_upper_bound(cfg).value
    True
"""

from .bounds import (
    bounded_pl_lower_bound,
    corr_scaling_lower_bound,
    log_ratio_bounds,
    mrc_lower_bound,
    mrc_upper_bound,
    sic_lower_bound,
    sic_upper_bound,
)
from .closed_form import (
    bounded_pl_mean_interference,
    corr_log_gain,
    expected_log_gain,
    gamma_ratio,
    interference_negative_moment,
    itlinq_probability,
    link_distance_log_mean,
    link_distance_moment,
    mrc_approx_multiantenna,
    mrc_closed_form_siso,
    optimal_density,
    optimal_density_numeric,
    sic_interference_mean,
    sic_interference_mean_campbell,
)
from .exact import (
    corr_sum_se_lower,
    mrc_sum_se_exact,
    mrc_sum_se_fixed_distance,
    sic_sum_se_bessel_lower,
    sic_sum_se_exact,
)
from .laplace import (
    correlated_signal_complement,
    gamma_signal_complement,
    interference_tail_integral,
    laplace_interference,
    sic_laplace,
    sic_laplace_bessel_bound,
)
from .quadrature import hamdi_ergodic, integrate, integrate_pieces
from .special import (
    bessel_i,
    bessel_k,
    cosine_integral,
    digamma,
    gamma_function,
    harmonic_digamma,
    hyp2f1_family,
    hyp2f1_family_integral,
    log_gamma,
    sinc,
    sine_integral,
)

__all__ = [
    # Special functions
    "sinc",
    "sine_integral",
    "cosine_integral",
    "gamma_function",
    "log_gamma",
    "digamma",
    "harmonic_digamma",
    "bessel_i",
    "bessel_k",
    "hyp2f1_family",
    "hyp2f1_family_integral",
    # Quadrature
    "integrate",
    "integrate_pieces",
    "hamdi_ergodic",
    # Laplace kernels
    "laplace_interference",
    "gamma_signal_complement",
    "correlated_signal_complement",
    "interference_tail_integral",
    "sic_laplace",
    "sic_laplace_bessel_bound",
    # Exact integrals
    "mrc_sum_se_fixed_distance",
    "mrc_sum_se_exact",
    "sic_sum_se_exact",
    "sic_sum_se_bessel_lower",
    "corr_sum_se_lower",
    # Closed forms
    "mrc_closed_form_siso",
    "mrc_approx_multiantenna",
    "optimal_density",
    "optimal_density_numeric",
    "itlinq_probability",
    "interference_negative_moment",
    "sic_interference_mean",
    "sic_interference_mean_campbell",
    "bounded_pl_mean_interference",
    "corr_log_gain",
    "expected_log_gain",
    "link_distance_moment",
    "link_distance_log_mean",
    "gamma_ratio",
    # Bounds
    "log_ratio_bounds",
    "mrc_lower_bound",
    "mrc_upper_bound",
    "sic_lower_bound",
    "sic_upper_bound",
    "bounded_pl_lower_bound",
    "corr_scaling_lower_bound",
]
