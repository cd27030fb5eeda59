"""Result types for Monte Carlo estimates and analytic evaluations."""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field

from .._types import AnalyticMethod
from .channel import Receiver


class SeEstimate(BaseModel):
    """Monte Carlo estimate of the spectral efficiency."""

    model_config = ConfigDict(frozen=True)

    sum_se: float
    """Sum spectral efficiency, lambda * per-link SE (bit/s/Hz/m^2)."""

    per_link_se: float
    """Mean of log2(1 + SINR) over realizations (bit/s/Hz)."""

    stderr: float = Field(ge=0.0)
    """Standard error of the per-link estimate."""

    n_realizations: int
    """Realizations averaged."""

    seed: int
    """Run seed the per-realization streams derive from."""

    density: float
    """Density lambda used for the sum."""

    receiver: Receiver
    """Receiver the estimate was produced for."""

    infinite_sinr_count: int = 0
    """Realizations with zero noise and zero residual interference."""

    window_tail_interference: float = 0.0
    """Mean interference from outside the sampling window (Campbell)."""

    stratified: bool = False
    """Whether link distances were stratified."""

    flagged: bool = False
    """True when infinite-SINR realizations exceed the reporting threshold."""

    @property
    def sum_stderr(self) -> float:
        return self.density * self.stderr


class NegativeMomentEstimate(BaseModel):
    """Monte Carlo estimate of E[1/I] next to its closed form."""

    model_config = ConfigDict(frozen=True)

    mean: float
    """Sample mean of 1/I over realizations with a non-empty field."""

    stderr: float = Field(ge=0.0)
    """Standard error of the mean."""

    analytic: float
    """Closed-form E[1/I]."""

    n_used: int
    """Realizations that contributed (non-empty fields)."""

    empty_fraction: float = Field(ge=0.0, le=1.0)
    """Share of realizations whose field was empty."""

    window_radius: float
    """Window radius actually sampled."""

    flagged: bool = False
    """True when empty fields exceed the reporting threshold."""

    @property
    def relative_error(self) -> float:
        return abs(self.mean - self.analytic) / self.analytic


class ProbabilityEstimate(BaseModel):
    """Monte Carlo frequency of an event next to its closed form."""

    model_config = ConfigDict(frozen=True)

    probability: float = Field(ge=0.0, le=1.0)
    """Observed frequency."""

    stderr: float = Field(ge=0.0)
    """Binomial standard error."""

    analytic: float
    """Closed-form probability."""

    n_realizations: int
    """Trials."""


class MeanEstimate(BaseModel):
    """Monte Carlo sample mean with its standard error."""

    model_config = ConfigDict(frozen=True)

    mean: float
    """Sample mean."""

    stderr: float = Field(ge=0.0)
    """Standard error of the mean."""

    n_realizations: int
    """Samples averaged."""


class AnalyticValue(BaseModel):
    """Value of an exact integral, closed form, approximation or bound."""

    model_config = ConfigDict(frozen=True)

    value: float
    """Sum SE (bit/s/Hz/m^2) unless ``per_link`` is stated by the operation."""

    abs_error_estimate: float = Field(default=0.0, ge=0.0)
    """Accumulated absolute quadrature error estimate (zero for closed forms)."""

    method: AnalyticMethod
    """How the value was obtained."""

    expression: str
    """Which expression produced it, e.g. ``"mrc_exact"``."""

    density: float
    """Density lambda the value refers to."""

    @property
    def per_link(self) -> float:
        """Value divided by the density (bit/s/Hz)."""
        if self.density == 0.0:
            return math.nan
        return self.value / self.density
