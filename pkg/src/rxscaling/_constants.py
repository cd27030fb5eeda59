"""Constants for rxscaling."""

from __future__ import annotations

from dataclasses import dataclass

ENV_VAR_LOG = "RXSCALING_LOG"

# Scenario defaults (the dense-network reference scenario)
DEFAULT_DENSITY = 5e-5  # interferers per m^2
DEFAULT_ALPHA = 4.0
DEFAULT_COMM_RANGE = 50.0  # metres
DEFAULT_N_RX = 4
DEFAULT_P_DBM = 20.0
DEFAULT_SIGMA2_DBM = -104.0

# Sampling window: R_sim >= SIM_RADIUS_FACTOR * R_d
SIM_RADIUS_FACTOR = 10.0

# Largest antenna count a sweep may request
N_RX_CAP = 512

# Monte Carlo
DEFAULT_REALIZATIONS = 200_000
DEFAULT_SEED = 2016
DEFAULT_BLOCK_SIZE = 1024  # realizations per worker task
INFINITE_SINR_FLAG_FRACTION = 1e-3
EMPTY_FIELD_FLAG_FRACTION = 1e-2
NEGATIVE_MOMENT_TAIL_TOLERANCE = 1e-2  # relative interference left outside window

# Quadrature
DEFAULT_REL_TOL = 1e-8
DEFAULT_ABS_TOL = 1e-12
DEFAULT_MAX_SUBDIVISIONS = 200
SERIES_CUTOFF = 1e-12  # below this z the 1/z kernel uses its first-order limit
HYP2F1_CROSS_CHECK_TOL = 1e-6

# Euler-Mascheroni constant
EULER_GAMMA = 0.5772156649015329

# CLI output schema (fixed order)
CSV_COLUMNS: tuple[str, ...] = (
    "lambda",
    "n_rx",
    "receiver",
    "L",
    "corr",
    "method",
    "value",
    "stderr",
    "abs_err",
    "n",
    "seed",
    "per_link",
)

# CLI exit codes
EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances for the adaptive quadrature behind every analytic value.

    Attributes:
        rel_tol: Relative tolerance passed to each QUADPACK call.
        abs_tol: Absolute tolerance passed to each QUADPACK call.
        max_subdivisions: Subinterval limit per call.
        cross_check: Re-evaluate every hypergeometric tail integral by direct
            quadrature and fail when the two disagree.
        series_cutoff: Below this argument the 1/z kernel is evaluated at the
            cutoff instead (first-order limit).
    """

    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = DEFAULT_ABS_TOL
    max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS
    cross_check: bool = False
    series_cutoff: float = SERIES_CUTOFF

    def with_tolerance(
        self, rel_tol: float, abs_tol: float | None = None
    ) -> QuadratureConfig:
        """Create a new config with different tolerances.

        Args:
            rel_tol: The new relative tolerance.
            abs_tol: The new absolute tolerance. Keeps the current one if None.

        Returns:
            A new QuadratureConfig with the updated values.
        """
        return QuadratureConfig(
            rel_tol=rel_tol,
            abs_tol=self.abs_tol if abs_tol is None else abs_tol,
            max_subdivisions=self.max_subdivisions,
            cross_check=self.cross_check,
            series_cutoff=self.series_cutoff,
        )

    def with_cross_check(self, enabled: bool = True) -> QuadratureConfig:
        """Create a new config with the hypergeometric cross-check toggled."""
        return QuadratureConfig(
            rel_tol=self.rel_tol,
            abs_tol=self.abs_tol,
            max_subdivisions=self.max_subdivisions,
            cross_check=enabled,
            series_cutoff=self.series_cutoff,
        )


DEFAULT_QUADRATURE = QuadratureConfig()
