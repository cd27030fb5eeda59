"""Type definitions for rxscaling."""

from __future__ import annotations

from typing import Literal, TypedDict

from typing_extensions import NotRequired

# =============================================================================
# Model Literals
# =============================================================================

PathLossModel = Literal["unbounded", "bounded"]
"""Path-loss law: ``x**-alpha`` or ``min(1, x**-alpha)``."""

ReceiverKind = Literal["mrc", "zfsic"]
"""Receiver structure at the typical receiver."""

CorrelationKind = Literal["none", "exponential", "explicit"]
"""How the receive-antenna correlation matrix is specified."""

AnalyticMethod = Literal["exact_integral", "closed_form", "approximation", "lower_bound", "upper_bound"]
"""How an analytic value was obtained."""

SweepMethod = Literal["mc", "exact", "lower", "upper"]
"""Evaluation methods available to a density sweep."""

Regime = Literal["vanishing", "linear", "superlinear"]
"""Asymptotic behaviour of the sum spectral efficiency with density."""

FitAgainst = Literal["log", "linear"]
"""Regress ln(per-link SE) on ln(lambda), or per-link SE on ln(lambda)."""

TailMethod = Literal["hyp2f1", "quadrature"]
"""Evaluation route for the residual-interference tail integral."""

# =============================================================================
# Config File Types
# =============================================================================

CONFIG_KEYS: tuple[str, ...] = (
    "density",
    "alpha",
    "r_d",
    "n_rx",
    "p_dbm",
    "sigma2_dbm",
    "pathloss",
    "r_sim",
)
"""Keys accepted in a ``key=value`` configuration file."""


class ConfigValues(TypedDict):
    """Parsed contents of a configuration file (all keys optional)."""

    density: NotRequired[float]
    """Interferer density (per m^2)."""

    alpha: NotRequired[float]
    """Path-loss exponent."""

    r_d: NotRequired[float]
    """Communication range R_d (m)."""

    n_rx: NotRequired[int]
    """Receive antennas."""

    p_dbm: NotRequired[float]
    """Transmit power (dBm)."""

    sigma2_dbm: NotRequired[float]
    """Noise power (dBm); ``-inf`` for interference-limited."""

    pathloss: NotRequired[PathLossModel]
    """Path-loss law."""

    r_sim: NotRequired[float]
    """Simulation window radius (m)."""
