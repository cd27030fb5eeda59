"""Types for receivers, antenna correlation and per-realization gains."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from .._exceptions import AntennaBudgetError, InvalidParameterError
from .._types import CorrelationKind, ReceiverKind


class Receiver(BaseModel):
    """Receiver structure: MRC, or ZF-SIC cancelling the L nearest interferers."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: ReceiverKind = "mrc"
    """Receiver type."""

    cancel: int = Field(default=0, ge=0)
    """Interferers cancelled (ZF-SIC only)."""

    @model_validator(mode="after")
    def _check(self) -> Self:
        if self.kind == "mrc" and self.cancel != 0:
            raise InvalidParameterError(
                "MRC does not cancel interferers",
                parameter="cancel",
                value=self.cancel,
                condition="L = 0 for mrc",
            )
        return self

    @classmethod
    def mrc(cls) -> Receiver:
        return cls(kind="mrc")

    @classmethod
    def zfsic(cls, cancel: int) -> Receiver:
        return cls(kind="zfsic", cancel=cancel)

    @classmethod
    def parse(cls, text: str) -> Receiver:
        """Parse ``"mrc"``, ``"zfsic"`` (L = 0) or ``"zfsic:L"``."""
        name, _, budget = text.strip().lower().partition(":")
        if name == "mrc" and not budget:
            return cls.mrc()
        if name == "zfsic":
            try:
                return cls.zfsic(int(budget) if budget else 0)
            except ValueError:
                pass
        raise InvalidParameterError(
            f"unknown receiver {text!r}",
            parameter="receiver",
            value=text,
            condition="mrc | zfsic:L",
        )

    @property
    def label(self) -> str:
        return "mrc" if self.kind == "mrc" else f"zfsic:{self.cancel}"

    def check_budget(self, n_rx: int) -> None:
        """Raise AntennaBudgetError unless L <= N_r - 1."""
        if self.cancel > n_rx - 1:
            raise AntennaBudgetError(
                f"cannot cancel {self.cancel} interferers with {n_rx} antennas",
                parameter="cancel",
                value=self.cancel,
                condition="L <= N_r - 1",
            )


class CorrelationSpec(BaseModel):
    """Receive-antenna correlation.

    ``none`` is i.i.d. fading, ``exponential`` builds C[i, j] = rho**|i - j|,
    ``explicit`` takes the eigenvalues of C directly (rank r <= N_r).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: CorrelationKind = "none"
    """How the correlation is specified."""

    n_rx: int = Field(ge=1)
    """Number of receive antennas the spec applies to."""

    rho: float = 0.0
    """Correlation coefficient for the exponential model."""

    eigenvalues: tuple[float, ...] | None = None
    """Eigenvalues for the explicit model, stored in descending order."""

    @model_validator(mode="after")
    def _check(self) -> Self:
        if self.kind == "exponential" and not 0.0 <= self.rho < 1.0:
            raise InvalidParameterError(
                f"correlation coefficient must lie in [0, 1), got {self.rho}",
                parameter="rho",
                value=self.rho,
                condition="0 <= rho < 1",
            )
        if self.kind == "explicit":
            values = self.eigenvalues
            if not values or len(values) > self.n_rx:
                raise InvalidParameterError(
                    "explicit correlation needs between 1 and N_r eigenvalues",
                    parameter="eigenvalues",
                    value=values,
                    condition="1 <= rank <= N_r",
                )
            if min(values) < 0.0 or max(values) <= 0.0:
                raise InvalidParameterError(
                    "correlation matrix must be positive semi-definite",
                    parameter="eigenvalues",
                    value=values,
                    condition="eigenvalues >= 0, at least one positive",
                )
            object.__setattr__(
                self, "eigenvalues", tuple(sorted(values, reverse=True))
            )
        return self

    @classmethod
    def none(cls, n_rx: int) -> CorrelationSpec:
        return cls(kind="none", n_rx=n_rx)

    @classmethod
    def exponential(cls, n_rx: int, rho: float) -> CorrelationSpec:
        return cls(kind="exponential", n_rx=n_rx, rho=rho)

    @classmethod
    def explicit(cls, eigenvalues: list[float] | tuple[float, ...], n_rx: int | None = None) -> CorrelationSpec:
        values = tuple(float(v) for v in eigenvalues)
        return cls(kind="explicit", n_rx=n_rx or len(values), eigenvalues=values)

    @classmethod
    def parse(cls, text: str, n_rx: int) -> CorrelationSpec:
        """Parse ``"none"`` or ``"exp:rho"``."""
        name, _, arg = text.strip().lower().partition(":")
        if name == "none" and not arg:
            return cls.none(n_rx)
        if name in ("exp", "exponential") and arg:
            try:
                return cls.exponential(n_rx, float(arg))
            except ValueError:
                pass
        raise InvalidParameterError(
            f"unknown correlation {text!r}",
            parameter="corr",
            value=text,
            condition="none | exp:rho",
        )

    @property
    def is_identity(self) -> bool:
        return self.kind == "none" or (self.kind == "exponential" and self.rho == 0.0)

    @property
    def label(self) -> str:
        if self.kind == "none":
            return "none"
        if self.kind == "exponential":
            return f"exp:{self.rho:g}"
        return "eig:" + "/".join(f"{v:g}" for v in self.eigenvalues or ())


@dataclass(frozen=True)
class EffectiveGains:
    """Post-combining gains of one realization.

    Attributes:
        direct_gain: Gain of the desired link (Gamma(N_r, 1) without correlation).
        interference_gains: One gain per interferer, aligned with the field.
    """

    direct_gain: float
    interference_gains: NDArray[np.float64]


@dataclass(frozen=True)
class ZfSicGains(EffectiveGains):
    """ZF-SIC gains after cancelling the nearest interferers.

    ``interference_gains`` holds the residual interferers only, aligned with
    ``distances[cancelled:]`` of the field they were drawn for.

    Attributes:
        cancelled: Interferers actually cancelled, min(L, K).
    """

    cancelled: int = 0
