"""Sum spectral efficiency of dense wireless networks with multi-antenna receivers.

Transmitters form a Poisson field around a typical receiver with N_r
antennas that combines by MRC or cancels its nearest interferers by ZF-SIC.
The package estimates the ergodic sum spectral efficiency by Monte Carlo,
evaluates it from exact integrals and closed-form bounds, and sweeps the
density with N_r = ceil(c * lambda**beta) to expose the scaling regimes.

Example:
    >>> from rxscaling import NetworkConfig, Receiver, estimate_sum_se
    >>> from rxscaling.analytic import sic_sum_se_exact
    >>>
    >>> cfg = NetworkConfig.from_dbm(density=5e-5, n_rx=4)
    >>>
    >>> # Monte Carlo for ZF-SIC cancelling the three nearest interferers
    >>> est = estimate_sum_se(cfg, Receiver.zfsic(3), n_realizations=20_000, seed=1)
    >>>
    >>> # Exact integral for the same receiver
    >>> exact = sic_sum_se_exact(cfg, 3)
    >>> print(f"{est.sum_se:.3e} +/- {est.sum_stderr:.1e} vs {exact.value:.3e}")
"""

from ._constants import DEFAULT_QUADRATURE, QuadratureConfig
from ._exceptions import (
    AntennaBudgetError,
    ConfigFileError,
    InsufficientDataError,
    InvalidParameterError,
    NumericalError,
    QuadratureError,
    RxScalingError,
)
from ._rng import realization_stream
from ._version import __version__
from .geometry import sample_interferer_field, sample_link_distance
from .scaling import classify_regime, critical_beta, fit_asymptotic_exponent, run_sweep
from .simulator import (
    estimate_itlinq_probability,
    estimate_negative_moment,
    estimate_sum_se,
    sinr_sample,
)
from .types import (
    AnalyticValue,
    CorrelationSpec,
    ExponentFit,
    InterfererField,
    MeanEstimate,
    NegativeMomentEstimate,
    NetworkConfig,
    ProbabilityEstimate,
    Receiver,
    RunManifest,
    SeEstimate,
    SweepResult,
    SweepRow,
    SweepSpec,
)

__all__ = [
    # Version
    "__version__",
    # Configuration
    "NetworkConfig",
    "QuadratureConfig",
    "DEFAULT_QUADRATURE",
    # Exceptions
    "RxScalingError",
    "InvalidParameterError",
    "AntennaBudgetError",
    "InsufficientDataError",
    "ConfigFileError",
    "NumericalError",
    "QuadratureError",
    # Geometry
    "InterfererField",
    "sample_interferer_field",
    "sample_link_distance",
    # Channel
    "Receiver",
    "CorrelationSpec",
    # Simulation
    "realization_stream",
    "sinr_sample",
    "estimate_sum_se",
    "estimate_negative_moment",
    "estimate_itlinq_probability",
    "SeEstimate",
    "NegativeMomentEstimate",
    "ProbabilityEstimate",
    "MeanEstimate",
    # Analysis
    "AnalyticValue",
    # Scaling
    "SweepSpec",
    "SweepRow",
    "SweepResult",
    "ExponentFit",
    "run_sweep",
    "fit_asymptotic_exponent",
    "critical_beta",
    "classify_regime",
    # CLI
    "RunManifest",
]
