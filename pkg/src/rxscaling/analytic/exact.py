"""Exact integral expressions for the sum spectral efficiency.

Every expression is an instance of the ergodic-rate integral
int exp(-a z)/z (1 - L_X(z)) L_Y(z) dz, evaluated after the substitution
u = lam pi z**(2/alpha) / sinc(2/alpha) so the interference decay sits at
u of order one. MRC integrates the link distance on the outside; the
ZF-SIC and correlated expressions average the signal term over the link
distance on the inside.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence

import numpy as np

from .._constants import DEFAULT_QUADRATURE, QuadratureConfig
from .._utils import require, require_density
from ..types.channel import Receiver
from ..types.network import NetworkConfig
from ..types.results import AnalyticValue
from .laplace import (
    correlated_signal_complement,
    gamma_signal_complement,
    sic_laplace,
    sic_laplace_bessel_bound,
)
from .quadrature import LN2, ErrorLedger, integrate, integrate_pieces
from .special import sinc

__all__ = [
    "mrc_sum_se_fixed_distance",
    "mrc_sum_se_exact",
    "sic_sum_se_exact",
    "sic_sum_se_bessel_lower",
    "corr_sum_se_lower",
]

# Interference kernels are negligible beyond exp(-_DECAY_CUTOFF)
_DECAY_CUTOFF = 40.0


def _require_exact_inputs(cfg: NetworkConfig) -> None:
    require_density(cfg.density)
    require(
        cfg.pathloss == "unbounded",
        "exact expressions assume the unbounded path-loss law",
        parameter="pathloss",
        value=cfg.pathloss,
        condition="pathloss = unbounded",
    )


def _noise_factor(cfg: NetworkConfig) -> Callable[[float], float]:
    inverse_snr = cfg.inverse_snr
    if inverse_snr == 0.0:
        return lambda z: 1.0
    return lambda z: math.exp(-z * inverse_snr)


def _u_scale(cfg: NetworkConfig) -> float:
    # u = kappa * z**(2/alpha) with kappa = lam pi / sinc(2/alpha)
    return cfg.density * math.pi / sinc(2.0 / cfg.alpha)


def _noise_breakpoint(cfg: NetworkConfig) -> list[float]:
    if cfg.is_interference_limited:
        return []
    return [_u_scale(cfg) * cfg.snr ** (2.0 / cfg.alpha)]


def _per_link_fixed_distance(
    cfg: NetworkConfig, d: float, quad: QuadratureConfig
) -> tuple[float, float]:
    half = cfg.alpha / 2.0
    kappa = _u_scale(cfg)
    noise = _noise_factor(cfg)
    n_rx = cfg.n_rx
    d_alpha = d**cfg.alpha

    def integrand(u: float) -> float:
        if u <= 0.0:
            return 0.0
        z_total = (u / kappa) ** half  # unnormalised argument, signal sees z / d**alpha
        signal = float(gamma_signal_complement(n_rx, z_total / d_alpha))
        return math.exp(-u) * noise(z_total) * signal / u

    breaks = [0.0, kappa * d * d, 1.0, _DECAY_CUTOFF]
    value, abserr = integrate_pieces(
        integrand, breaks + _noise_breakpoint(cfg), quad, label="mrc_fixed_distance"
    )
    return half * value / LN2, half * abserr / LN2


def mrc_sum_se_fixed_distance(
    cfg: NetworkConfig, d: float, quad: QuadratureConfig = DEFAULT_QUADRATURE
) -> AnalyticValue:
    """Exact MRC sum SE with the link distance pinned to ``d``.

    Args:
        cfg: Scenario (unbounded path loss).
        d: Link distance.
        quad: Tolerances.

    Returns:
        lam times the per-link ergodic rate, method ``exact``.

    Raises:
        QuadratureError: If the integral does not converge.
    """
    _require_exact_inputs(cfg)
    require(d > 0.0, f"distance must be positive, got {d}", parameter="d", value=d, condition="d > 0")
    per_link, abserr = _per_link_fixed_distance(cfg, d, quad)
    return AnalyticValue(
        value=cfg.density * per_link,
        abs_error_estimate=cfg.density * abserr,
        method="exact_integral",
        expression="mrc_fixed_distance",
        density=cfg.density,
    )


def mrc_sum_se_exact(
    cfg: NetworkConfig, quad: QuadratureConfig = DEFAULT_QUADRATURE
) -> AnalyticValue:
    """Exact MRC sum SE averaged over the link-distance law.

    Outer integral over r in [1, R_d] with weight 2r / (R_d^2 - 1), inner
    integral over u. Uses 1 - (1 + s)**-N_r in place of the binomial sum.

    Example:
        >>> cfg = NetworkConfig.from_dbm(density=5e-5, n_rx=4)
        >>> mrc_sum_se_exact(cfg).per_link > 0
        True
    """
    _require_exact_inputs(cfg)
    ledger = ErrorLedger()
    r_d = cfg.comm_range
    weight = 2.0 / (r_d * r_d - 1.0)

    def outer(r: float) -> float:
        value, abserr = _per_link_fixed_distance(cfg, r, quad)
        ledger.record(value, abserr)
        return weight * r * value

    per_link, abserr = integrate(outer, 1.0, r_d, quad, label="mrc_exact")
    error = abserr + ledger.max_relative * abs(per_link)
    return AnalyticValue(
        value=cfg.density * per_link,
        abs_error_estimate=cfg.density * error,
        method="exact_integral",
        expression="mrc_exact",
        density=cfg.density,
    )


def _distance_averaged(
    cfg: NetworkConfig,
    interference: Callable[[float, float], float],
    signal_complement: Callable[[float], float],
    interference_breaks: Sequence[float],
    quad: QuadratureConfig,
    label: str,
) -> tuple[float, float]:
    """Per-link rate with the signal term averaged over d inside the z integral.

    ``interference(u, z)`` is the interference Laplace transform at z (u is
    the substituted variable), ``signal_complement(s)`` is 1 - L_H(s).
    """
    half = cfg.alpha / 2.0
    kappa = _u_scale(cfg)
    noise = _noise_factor(cfg)
    r_d = cfg.comm_range
    weight = 2.0 / (r_d * r_d - 1.0)
    ledger = ErrorLedger()

    def averaged_signal(z: float) -> float:
        def inner(x: float) -> float:
            return signal_complement(z * x**-cfg.alpha) * weight * x

        knee = z ** (1.0 / cfg.alpha)
        if 1.0 < knee < r_d:
            head, e1 = integrate(inner, 1.0, knee, quad, label=label)
            tail, e2 = integrate(inner, knee, r_d, quad, label=label)
            value, abserr = head + tail, e1 + e2
        else:
            value, abserr = integrate(inner, 1.0, r_d, quad, label=label)
        ledger.record(value, abserr)
        return value

    def integrand(u: float) -> float:
        if u <= 0.0:
            return 0.0
        z = (u / kappa) ** half
        laplace = interference(u, z)
        if laplace == 0.0:
            return 0.0
        return laplace * noise(z) * averaged_signal(z) / u

    breaks = [0.0, kappa, kappa * r_d * r_d, *interference_breaks, *_noise_breakpoint(cfg)]
    value, abserr = integrate_pieces(integrand, breaks, quad, label=label)
    per_link = half * value / LN2
    error = half * abserr / LN2 + ledger.max_relative * abs(per_link)
    return per_link, error


def sic_sum_se_exact(
    cfg: NetworkConfig, cancel: int, quad: QuadratureConfig = DEFAULT_QUADRATURE
) -> AnalyticValue:
    """Exact ZF-SIC sum SE when the L nearest interferers are cancelled.

    lam int_1^R_d int_0^inf [1 - (1 + z x**-alpha)**-N_r] L_I(L; z) exp(-z/SNR) / z dz
    2x / (R_d^2 - 1) dx, in bits.

    Args:
        cfg: Scenario (unbounded path loss).
        cancel: L with 1 <= L <= N_r - 1.
        quad: Tolerances.

    Raises:
        AntennaBudgetError: If L > N_r - 1.
        QuadratureError: If an integral does not converge.
    """
    _require_exact_inputs(cfg)
    require(cancel >= 1, f"L must be at least 1, got {cancel}", parameter="L", value=cancel, condition="L >= 1")
    Receiver.zfsic(cancel).check_budget(cfg.n_rx)
    n_rx = cfg.n_rx

    def interference(u: float, z: float) -> float:
        return sic_laplace(cancel, z, cfg.density, cfg.alpha, quad)

    spread = 12.0 * math.sqrt(cancel) + 12.0
    per_link, error = _distance_averaged(
        cfg,
        interference,
        lambda s: float(gamma_signal_complement(n_rx, s)),
        [1.0, float(cancel), cancel + spread, cancel + spread + _DECAY_CUTOFF],
        quad,
        "sic_exact",
    )
    return AnalyticValue(
        value=cfg.density * per_link,
        abs_error_estimate=cfg.density * error,
        method="exact_integral",
        expression="sic_exact",
        density=cfg.density,
    )


def sic_sum_se_bessel_lower(
    cfg: NetworkConfig, cancel: int, quad: QuadratureConfig = DEFAULT_QUADRATURE
) -> AnalyticValue:
    """ZF-SIC lower bound with the Bessel-form interference transform (alpha = 4).

    Same integral as :func:`sic_sum_se_exact` with L_I replaced by its
    Jensen lower bound, so the value never exceeds the exact one.
    """
    _require_exact_inputs(cfg)
    require(cfg.alpha == 4.0, "Bessel bound is stated for alpha = 4", parameter="alpha", value=cfg.alpha, condition="alpha = 4")
    require(cancel >= 1, f"L must be at least 1, got {cancel}", parameter="L", value=cancel, condition="L >= 1")
    Receiver.zfsic(cancel).check_budget(cfg.n_rx)
    n_rx = cfg.n_rx

    def interference(u: float, z: float) -> float:
        return sic_laplace_bessel_bound(cancel, z, cfg.density)

    spread = 12.0 * math.sqrt(cancel) + 12.0
    per_link, error = _distance_averaged(
        cfg,
        interference,
        lambda s: float(gamma_signal_complement(n_rx, s)),
        [1.0, float(cancel), cancel + spread, (cancel + spread) ** 2],
        quad,
        "sic_bessel_lower",
    )
    return AnalyticValue(
        value=cfg.density * per_link,
        abs_error_estimate=cfg.density * error,
        method="lower_bound",
        expression="sic_bessel_lower",
        density=cfg.density,
    )


def corr_sum_se_lower(
    cfg: NetworkConfig,
    eigenvalues: Sequence[float],
    quad: QuadratureConfig = DEFAULT_QUADRATURE,
) -> AnalyticValue:
    """Lower bound on the MRC sum SE with receive correlation.

    lam int_1^R_d int_0^inf (1 - prod_n 1/(1 + mu_n z x**-alpha))
    exp(-mu_1**(2/alpha) lam pi z**(2/alpha) / sinc(2/alpha)) exp(-z/SNR) / z dz
    2x / (R_d^2 - 1) dx, in bits. With unit eigenvalues it equals the exact
    uncorrelated value.

    Args:
        cfg: Scenario (unbounded path loss).
        eigenvalues: Positive eigenvalues of C (any order).
        quad: Tolerances.
    """
    _require_exact_inputs(cfg)
    mu = np.sort(np.asarray(eigenvalues, dtype=np.float64))[::-1]
    require(
        mu.size > 0 and bool(np.all(mu > 0.0)),
        "eigenvalues must be positive",
        parameter="eigenvalues",
        value=tuple(mu),
        condition="mu_n > 0",
    )
    scale = float(mu[0]) ** (2.0 / cfg.alpha)

    def interference(u: float, z: float) -> float:
        return math.exp(-scale * u)

    per_link, error = _distance_averaged(
        cfg,
        interference,
        lambda s: correlated_signal_complement(mu, s),
        [1.0 / scale, _DECAY_CUTOFF / scale],
        quad,
        "corr_lower",
    )
    return AnalyticValue(
        value=cfg.density * per_link,
        abs_error_estimate=cfg.density * error,
        method="lower_bound",
        expression="corr_lower",
        density=cfg.density,
    )
