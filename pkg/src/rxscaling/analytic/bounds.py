"""Closed-form lower and upper bounds on the sum spectral efficiency.

All bounds assume an interference-limited network (sigma^2 = 0) and return
sum SE in bit/s/Hz/m^2.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import Literal

import numpy as np

from .._utils import require
from ..types.network import NetworkConfig
from ..types.results import AnalyticValue
from .closed_form import (
    bounded_pl_mean_interference,
    corr_log_gain,
    interference_negative_moment,
    link_distance_log_mean,
    link_distance_moment,
)
from .special import sinc

__all__ = [
    "log_ratio_bounds",
    "mrc_lower_bound",
    "mrc_upper_bound",
    "sic_lower_bound",
    "sic_upper_bound",
    "bounded_pl_lower_bound",
    "corr_scaling_lower_bound",
]


def log_ratio_bounds(
    mean_log_x: float, mean_y: float, mean_x: float, mean_inv_y: float
) -> tuple[float, float]:
    """Two-sided bounds on E[log2(1 + X/Y)] for independent X, Y > 0.

    Lower: log2(1 + exp(E[ln X]) / E[Y]). Upper: log2(1 + E[X] E[1/Y]).

    Returns:
        ``(lower, upper)`` in bits.
    """
    lower = math.log2(1.0 + math.exp(mean_log_x) / mean_y) if mean_y > 0.0 else math.inf
    upper = math.log2(1.0 + mean_x * mean_inv_y)
    return lower, upper


def _require_interference_limited(cfg: NetworkConfig) -> None:
    require(
        cfg.is_interference_limited,
        "bounds are stated for interference-limited networks",
        parameter="noise_power_mw",
        value=cfg.noise_power_mw,
        condition="sigma^2 = 0",
    )


def _require_unbounded(cfg: NetworkConfig) -> None:
    require(
        cfg.pathloss == "unbounded",
        "bound assumes the unbounded path-loss law",
        parameter="pathloss",
        value=cfg.pathloss,
        condition="pathloss = unbounded",
    )


def _bound(value: float, cfg: NetworkConfig, method: Literal["lower_bound", "upper_bound"], expression: str) -> AnalyticValue:
    return AnalyticValue(value=value, method=method, expression=expression, density=cfg.density)


def mrc_lower_bound(cfg: NetworkConfig) -> AnalyticValue:
    """lam (2/alpha) log2(1 + (2 sinc(2/alpha))**(alpha/2) (N_r - 1) / (lam pi (R_d^2 + 1))**(alpha/2)).

    Zero for a single antenna.
    """
    _require_interference_limited(cfg)
    _require_unbounded(cfg)
    if cfg.n_rx == 1:
        return _bound(0.0, cfg, "lower_bound", "mrc_lower")
    half = cfg.alpha / 2.0
    lam = cfg.density
    ratio = (2.0 * sinc(2.0 / cfg.alpha)) ** half * (cfg.n_rx - 1) / (
        lam * math.pi * (cfg.comm_range**2 + 1.0)
    ) ** half
    return _bound(lam / half * math.log2(1.0 + ratio), cfg, "lower_bound", "mrc_lower")


def mrc_upper_bound(cfg: NetworkConfig) -> AnalyticValue:
    """lam log2(1 + N_r E[d**-alpha] E[1/I]), the Jensen upper bound for MRC."""
    _require_interference_limited(cfg)
    _require_unbounded(cfg)
    signal = cfg.n_rx * link_distance_moment(cfg.comm_range, -cfg.alpha)
    _, upper = log_ratio_bounds(
        0.0, 1.0, signal, interference_negative_moment(cfg.density, cfg.alpha)
    )
    return _bound(cfg.density * upper, cfg, "upper_bound", "mrc_upper")


def sic_lower_bound(cfg: NetworkConfig, cancel: int | None = None) -> AnalyticValue:
    """ZF-SIC lower bound.

    lam log2(1 + ((alpha - 2)(alpha + 2) / 2**(alpha/2 + 1)) (N_r - 1)
    (L - alpha/2)**(alpha/2 - 1) / (lam pi R_d^2)**(alpha/2)), with
    L = N_r - 1 unless given.
    """
    _require_interference_limited(cfg)
    _require_unbounded(cfg)
    cancel = cfg.n_rx - 1 if cancel is None else cancel
    alpha, half = cfg.alpha, cfg.alpha / 2.0
    require(
        cancel <= cfg.n_rx - 1,
        f"cannot cancel {cancel} interferers with {cfg.n_rx} antennas",
        parameter="L",
        value=cancel,
        condition="L <= N_r - 1",
    )
    require(
        cancel > half,
        f"lower bound needs L > alpha/2, got L = {cancel}",
        parameter="L",
        value=cancel,
        condition="N_r - 1 > alpha/2",
    )
    lam = cfg.density
    constant = (alpha - 2.0) * (alpha + 2.0) / 2.0 ** (half + 1.0)
    ratio = (
        constant
        * (cfg.n_rx - 1)
        * (cancel - half) ** (half - 1.0)
        / (lam * math.pi * cfg.comm_range**2) ** half
    )
    return _bound(lam * math.log2(1.0 + ratio), cfg, "lower_bound", "sic_lower")


def sic_upper_bound(cfg: NetworkConfig) -> AnalyticValue:
    """ZF-SIC upper bound with L = N_r - 1.

    lam log2(1 + (alpha / 2**(alpha/2 + 1)) ((N_r - 1) / (pi lam))**(alpha/2)
    (N_r / (N_r - 1)) E[d**-alpha]).
    """
    _require_interference_limited(cfg)
    _require_unbounded(cfg)
    require(cfg.n_rx >= 2, f"N_r must be >= 2, got {cfg.n_rx}", parameter="n_rx", value=cfg.n_rx, condition="N_r >= 2")
    alpha, half = cfg.alpha, cfg.alpha / 2.0
    lam, n = cfg.density, cfg.n_rx
    ratio = (
        alpha
        / 2.0 ** (half + 1.0)
        * ((n - 1) / (math.pi * lam)) ** half
        * (n / (n - 1))
        * link_distance_moment(cfg.comm_range, -alpha)
    )
    return _bound(lam * math.log2(1.0 + ratio), cfg, "upper_bound", "sic_upper")


def bounded_pl_lower_bound(
    cfg: NetworkConfig,
    distance_factor: Literal["annulus", "as_printed"] = "annulus",
) -> AnalyticValue:
    """MRC lower bound under the bounded path-loss law min(1, x**-alpha).

    The interference is replaced by its Campbell mean 2 pi lam (1/2 + 1/(alpha - 2))
    and the signal by exp(E[ln H] - alpha E[ln d]) >= (N_r - 1) exp(-alpha E[ln d]).
    ``"annulus"`` uses E[ln d] of the link-distance law; ``"as_printed"`` uses the
    factor exp(alpha / (2 R_d^2) - alpha / 2) in place of exp(-alpha E[ln d]).
    """
    _require_interference_limited(cfg)
    require(
        cfg.pathloss == "bounded",
        "bound assumes the bounded path-loss law",
        parameter="pathloss",
        value=cfg.pathloss,
        condition="pathloss = bounded",
    )
    expression = "bounded_pl_lower" if distance_factor == "annulus" else "bounded_pl_lower_as_printed"
    if cfg.n_rx == 1:
        return _bound(0.0, cfg, "lower_bound", expression)
    alpha, r_d = cfg.alpha, cfg.comm_range
    if distance_factor == "annulus":
        log_distance = -alpha * link_distance_log_mean(r_d)
    else:
        log_distance = alpha / (2.0 * r_d * r_d) - alpha / 2.0
    mean_log_signal = math.log(cfg.n_rx - 1) + log_distance
    mean_interference = bounded_pl_mean_interference(cfg.density, alpha)
    lower, _ = log_ratio_bounds(mean_log_signal, mean_interference, 0.0, 0.0)
    return _bound(cfg.density * lower, cfg, "lower_bound", expression)


def corr_scaling_lower_bound(cfg: NetworkConfig, eigenvalues: Sequence[float]) -> AnalyticValue:
    """Closed-form MRC lower bound with receive correlation.

    The signal term is exp(ln r + mean ln mu - gamma) and the interference is
    dominated by mu_1 times the uncorrelated field:

        lam (2/alpha) log2(1 + (2 sinc(2/alpha))**(alpha/2) exp(G)
                         / (mu_1 (lam pi (R_d^2 + 1))**(alpha/2))).
    """
    _require_interference_limited(cfg)
    _require_unbounded(cfg)
    mu = np.sort(np.asarray(eigenvalues, dtype=np.float64))[::-1]
    gain = math.exp(corr_log_gain(mu))
    half = cfg.alpha / 2.0
    lam = cfg.density
    ratio = (2.0 * sinc(2.0 / cfg.alpha)) ** half * gain / (
        mu[0] * (lam * math.pi * (cfg.comm_range**2 + 1.0)) ** half
    )
    return _bound(lam / half * math.log2(1.0 + ratio), cfg, "lower_bound", "corr_scaling_lower")
