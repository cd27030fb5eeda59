"""Types describing the network scenario and a sampled interferer field."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from .._constants import (
    DEFAULT_ALPHA,
    DEFAULT_COMM_RANGE,
    DEFAULT_DENSITY,
    DEFAULT_N_RX,
    DEFAULT_P_DBM,
    DEFAULT_SIGMA2_DBM,
    SIM_RADIUS_FACTOR,
)
from .._exceptions import InvalidParameterError
from .._types import PathLossModel
from .._utils import dbm_to_mw


class NetworkConfig(BaseModel):
    """Scenario parameters shared by simulation and analysis."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    density: float = Field(default=DEFAULT_DENSITY, ge=0.0)
    """Transmitter density lambda (per m^2). Zero gives an empty field."""

    alpha: float = DEFAULT_ALPHA
    """Path-loss exponent, strictly greater than 2."""

    comm_range: float = DEFAULT_COMM_RANGE
    """Communication range R_d (m); link distances lie in [1, R_d]."""

    n_rx: int = Field(default=DEFAULT_N_RX, ge=1)
    """Receive antennas N_r."""

    tx_power_mw: float = Field(default_factory=lambda: dbm_to_mw(DEFAULT_P_DBM), gt=0.0)
    """Transmit power P (mW)."""

    noise_power_mw: float = Field(
        default_factory=lambda: dbm_to_mw(DEFAULT_SIGMA2_DBM), ge=0.0
    )
    """Noise power sigma^2 (mW); zero means interference-limited."""

    pathloss: PathLossModel = "unbounded"
    """Path-loss law applied to interferers."""

    sim_radius: float | None = None
    """Simulation window radius R_sim; defaults to 10 * R_d."""

    @model_validator(mode="after")
    def _check(self) -> Self:
        if not self.alpha > 2.0:
            raise InvalidParameterError(
                f"path-loss exponent must exceed 2, got {self.alpha}",
                parameter="alpha",
                value=self.alpha,
                condition="alpha > 2",
            )
        if not self.comm_range > 1.0:
            raise InvalidParameterError(
                f"communication range must exceed 1, got {self.comm_range}",
                parameter="comm_range",
                value=self.comm_range,
                condition="R_d > 1",
            )
        if self.sim_radius is None:
            object.__setattr__(self, "sim_radius", SIM_RADIUS_FACTOR * self.comm_range)
        elif self.sim_radius < SIM_RADIUS_FACTOR * self.comm_range:
            raise InvalidParameterError(
                f"simulation radius {self.sim_radius} is below "
                f"{SIM_RADIUS_FACTOR:g} * R_d",
                parameter="sim_radius",
                value=self.sim_radius,
                condition="R_sim >= 10 * R_d",
            )
        return self

    @classmethod
    def from_dbm(
        cls,
        *,
        p_dbm: float = DEFAULT_P_DBM,
        sigma2_dbm: float = DEFAULT_SIGMA2_DBM,
        **kwargs: Any,
    ) -> NetworkConfig:
        """Build a config with powers given in dBm.

        Args:
            p_dbm: Transmit power in dBm.
            sigma2_dbm: Noise power in dBm; ``-inf`` for interference-limited.
            **kwargs: Remaining NetworkConfig fields.

        Returns:
            The validated configuration.
        """
        return cls(
            tx_power_mw=dbm_to_mw(p_dbm),
            noise_power_mw=dbm_to_mw(sigma2_dbm),
            **kwargs,
        )

    @property
    def radius(self) -> float:
        """Resolved simulation window radius."""
        assert self.sim_radius is not None
        return self.sim_radius

    @property
    def snr(self) -> float:
        """P / sigma^2 (infinite when interference-limited)."""
        if self.noise_power_mw == 0.0:
            return math.inf
        return self.tx_power_mw / self.noise_power_mw

    @property
    def inverse_snr(self) -> float:
        """sigma^2 / P, the noise term in SINR denominators."""
        return self.noise_power_mw / self.tx_power_mw

    @property
    def is_interference_limited(self) -> bool:
        return self.noise_power_mw == 0.0

    def path_loss(self, x: NDArray[np.float64] | float) -> NDArray[np.float64]:
        """Evaluate the interferer path-loss law at distance(s) ``x``."""
        x = np.asarray(x, dtype=np.float64)
        gain = np.power(x, -self.alpha)
        if self.pathloss == "bounded":
            gain = np.minimum(1.0, gain)
        return gain

    def with_updates(self, **changes: Any) -> NetworkConfig:
        """Return a re-validated copy with ``changes`` applied.

        An explicit ``sim_radius`` is kept; a defaulted one is recomputed
        from the new range.
        """
        data = self.model_dump()
        if "comm_range" in changes and "sim_radius" not in changes:
            if data["sim_radius"] == SIM_RADIUS_FACTOR * self.comm_range:
                data["sim_radius"] = None
        data.update(changes)
        return NetworkConfig.model_validate(data)

    def interference_limited(self) -> NetworkConfig:
        """Copy of this config with sigma^2 = 0."""
        return self.with_updates(noise_power_mw=0.0)


@dataclass(frozen=True)
class InterfererField:
    """Interferer distances seen from the typical receiver at the origin.

    Attributes:
        distances: Distances in ascending order (strictly increasing).
        radius: Window radius the field was drawn in.
    """

    distances: NDArray[np.float64]
    radius: float

    @property
    def count(self) -> int:
        return int(self.distances.shape[0])

    def nearest(self) -> float:
        """Distance to the nearest interferer (infinity if the field is empty)."""
        return float(self.distances[0]) if self.count else math.inf
