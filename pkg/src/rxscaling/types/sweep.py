"""Types for density sweeps and exponent fits."""

from __future__ import annotations

import hashlib
import math
from typing import TYPE_CHECKING

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .._constants import DEFAULT_REALIZATIONS, DEFAULT_SEED, N_RX_CAP
from .._types import FitAgainst, ReceiverKind, SweepMethod
from .network import NetworkConfig

if TYPE_CHECKING:
    import pandas as pd


class SweepSpec(BaseModel):
    """A sweep over densities with N_r = ceil(c * lambda**beta)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    densities: tuple[float, ...]
    """Density grid, strictly increasing."""

    c: float = Field(gt=0.0)
    """Antenna-scaling constant."""

    beta: float = Field(ge=0.0)
    """Antenna-scaling exponent."""

    receiver: ReceiverKind = "mrc"
    """MRC, or ZF-SIC cancelling L = N_r - 1 interferers."""

    methods: tuple[SweepMethod, ...] = ("exact",)
    """Evaluation methods per grid point."""

    base: NetworkConfig = Field(default_factory=NetworkConfig)
    """Scenario; its density and n_rx are overridden per grid point."""

    interference_limited: bool = True
    """Force sigma^2 = 0 for every method."""

    n_realizations: int = Field(default=DEFAULT_REALIZATIONS, gt=0)
    """Realizations per Monte Carlo point."""

    seed: int = Field(default=DEFAULT_SEED, ge=0)
    """Base seed; point i uses seed + i."""

    n_rx_cap: int = Field(default=N_RX_CAP, ge=1)
    """Largest antenna count a point may request."""

    workers: int = Field(default=1, ge=1)
    """Grid points evaluated concurrently."""

    @field_validator("densities")
    @classmethod
    def _check_grid(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if len(value) < 2:
            raise ValueError("density grid needs at least two points")
        if any(v <= 0.0 or not math.isfinite(v) for v in value):
            raise ValueError("densities must be positive and finite")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("densities must be strictly increasing")
        return value

    @field_validator("methods")
    @classmethod
    def _check_methods(cls, value: tuple[SweepMethod, ...]) -> tuple[SweepMethod, ...]:
        if not value:
            raise ValueError("at least one method is required")
        return tuple(dict.fromkeys(value))

    def fingerprint(self) -> str:
        """SHA-256 of the canonical JSON form of this spec."""
        return hashlib.sha256(self.model_dump_json().encode()).hexdigest()


class SweepRow(BaseModel):
    """One (density, method) evaluation of a sweep."""

    model_config = ConfigDict(frozen=True)

    density: float
    """Density lambda."""

    n_rx: int
    """Antennas used at this density."""

    receiver: str
    """Receiver label, e.g. ``"zfsic:7"``."""

    cancel: int
    """Interferers cancelled."""

    method: SweepMethod
    """Evaluation method."""

    value: float | None = None
    """Sum SE (bit/s/Hz/m^2); None when the method failed at this point."""

    stderr: float | None = None
    """Standard error of ``value`` (Monte Carlo only)."""

    abs_err: float | None = None
    """Quadrature error estimate of ``value`` (exact only)."""

    n_realizations: int | None = None
    """Realizations used (Monte Carlo only)."""

    seed: int | None = None
    """Seed used (Monte Carlo only)."""

    capped: bool = False
    """True when ceil(c * lambda**beta) exceeded the antenna cap."""

    error: str | None = None
    """Failure message when ``value`` is None."""

    @property
    def per_link(self) -> float | None:
        return None if self.value is None else self.value / self.density


class SweepResult(BaseModel):
    """All rows of a sweep, in grid order then method order."""

    model_config = ConfigDict(frozen=True)

    spec: SweepSpec
    """The sweep that produced these rows."""

    rows: tuple[SweepRow, ...]
    """Evaluations in deterministic order."""

    fingerprint: str
    """SHA-256 of the spec."""

    def for_method(self, method: SweepMethod) -> list[SweepRow]:
        return [row for row in self.rows if row.method == method]

    def per_link(self, method: SweepMethod) -> list[tuple[float, float]]:
        """(lambda, per-link SE) pairs for the successful rows of ``method``."""
        return [
            (row.density, row.value / row.density)
            for row in self.for_method(method)
            if row.value is not None
        ]

    def to_frame(self) -> pd.DataFrame:
        """Rows as a pandas DataFrame with a ``per_link`` column."""
        import pandas as pd

        records = []
        for row in self.rows:
            record = row.model_dump()
            record["per_link"] = row.per_link
            records.append(record)
        return pd.DataFrame.from_records(records)


class ExponentFit(BaseModel):
    """Least-squares fit over the asymptotic window of a sweep."""

    model_config = ConfigDict(frozen=True)

    slope: float
    """Fitted slope."""

    intercept: float
    """Fitted intercept."""

    stderr: float
    """Standard error of the slope."""

    r_squared: float
    """Coefficient of determination (NaN when undefined)."""

    against: FitAgainst
    """Regression form."""

    window: tuple[float, float]
    """Smallest and largest density in the fit."""

    n_points: int
    """Points in the window."""

    residuals: tuple[float, ...]
    """Fit residuals in grid order."""
