"""Closed-form expressions: single-antenna rates, moments, probabilities."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
from scipy import optimize, special

from .._constants import EULER_GAMMA
from .._utils import require, require_alpha, require_density
from .special import cosine_integral, sine_integral, sinc

__all__ = [
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
]

LN2 = math.log(2.0)


def _siso_kernel(w: float) -> float:
    # (2/ln2) * (sin w (pi/2 - Si w) - cos w Ci w)
    return (2.0 / LN2) * (
        math.sin(w) * (math.pi / 2.0 - sine_integral(w)) - math.cos(w) * cosine_integral(w)
    )


def mrc_closed_form_siso(lam: float, d: float) -> float:
    """Per-link SE of a single-antenna link at distance d (alpha = 4, no noise).

    Args:
        lam: Density.
        d: Link distance.

    Returns:
        (2/ln2) {sin w (pi/2 - Si w) - cos w Ci w} with w = lam pi^2 d^2 / 2,
        in bit/s/Hz.

    Example:
        >>> round(mrc_closed_form_siso(1e-4, 1 / math.sqrt(1e-4 * math.pi)), 4)
        0.5772
    """
    require_density(lam)
    require(d > 0.0, f"distance must be positive, got {d}", parameter="d", value=d, condition="d > 0")
    return _siso_kernel(lam * math.pi**2 * d * d / 2.0)


def mrc_approx_multiantenna(lam: float, d: float, n_rx: int) -> float:
    """High-antenna approximation: the SISO form with w = lam pi^2 d^2 / (2 sqrt(N_r))."""
    require_density(lam)
    require(n_rx >= 1, f"N_r must be >= 1, got {n_rx}", parameter="n_rx", value=n_rx, condition="N_r >= 1")
    return _siso_kernel(lam * math.pi**2 * d * d / (2.0 * math.sqrt(n_rx)))


def optimal_density(n_rx: int, alpha: float, comm_range: float) -> float:
    """High-SIR density rule 2 sinc(2/alpha) (N_r - 1)**(2/alpha) / (pi (1 + R_d^2))."""
    require_alpha(alpha)
    require(n_rx >= 2, f"N_r must be >= 2, got {n_rx}", parameter="n_rx", value=n_rx, condition="N_r >= 2")
    delta = 2.0 / alpha
    return 2.0 * sinc(delta) * (n_rx - 1) ** delta / (math.pi * (1.0 + comm_range**2))


def optimal_density_numeric(n_rx: int, alpha: float, comm_range: float) -> float:
    """Maximiser of lam log2(1 + (2 sinc)^(alpha/2) (N_r - 1) / (lam pi (1 + R_d^2))^(alpha/2)).

    Solved by bounded scalar minimisation in log(lam) around the high-SIR rule.
    """
    anchor = optimal_density(n_rx, alpha, comm_range)
    half = alpha / 2.0
    gain = (2.0 * sinc(2.0 / alpha)) ** half * (n_rx - 1)
    spread = math.pi * (1.0 + comm_range**2)

    def negative_objective(log_lam: float) -> float:
        lam = math.exp(log_lam)
        return -lam * math.log1p(gain / (lam * spread) ** half)

    result = optimize.minimize_scalar(
        negative_objective,
        bounds=(math.log(anchor) - 6.0, math.log(anchor) + 2.0),
        method="bounded",
        options={"xatol": 1e-10},
    )
    return float(math.exp(result.x))


def itlinq_probability(
    lam: float, tx_power: float, noise_power: float, n_rx: int, alpha: float, d: float
) -> float:
    """Probability that the typical link meets the ITLinQ destination condition.

    With deterministic array gain N_r and unit interferer gain, the condition
    holds iff the nearest interferer lies beyond (P / (sigma^2 N_r))**(1/(2 alpha)) sqrt(d),
    giving exp(-lam pi (P / (sigma^2 N_r))**(1/alpha) d).
    """
    require(noise_power > 0.0, "ITLinQ condition needs sigma^2 > 0", parameter="noise_power", value=noise_power, condition="sigma^2 > 0")
    require_alpha(alpha)
    require(lam >= 0.0, f"density must be non-negative, got {lam}", parameter="density", value=lam, condition="lambda >= 0")
    ratio = tx_power / (noise_power * n_rx)
    return math.exp(-lam * math.pi * ratio ** (1.0 / alpha) * d)


def interference_negative_moment(lam: float, alpha: float) -> float:
    """E[1/I] = Gamma(1 + alpha/2) sinc(2/alpha)**(alpha/2) / (lam pi)**(alpha/2)."""
    require_density(lam)
    require_alpha(alpha)
    half = alpha / 2.0
    return float(special.gamma(1.0 + half)) * sinc(2.0 / alpha) ** half / (lam * math.pi) ** half


def _require_cancel_for_mean(alpha: float, cancel: int) -> None:
    require(
        cancel > alpha / 2.0 - 1.0,
        f"mean residual interference diverges for L = {cancel}",
        parameter="L",
        value=cancel,
        condition="L > alpha/2 - 1",
    )


def sic_interference_mean(lam: float, alpha: float, cancel: int) -> float:
    """Residual-interference mean in its published form.

    (2 pi lam)**(alpha/2) Gamma(1 - alpha/2 + L) / ((alpha - 2) Gamma(L)).
    It exceeds the exact mean by 2**(alpha/2 - 1), so bounds built on it stay
    conservative; see :func:`sic_interference_mean_campbell`.
    """
    require_density(lam)
    require_alpha(alpha)
    _require_cancel_for_mean(alpha, cancel)
    half = alpha / 2.0
    log_ratio = special.gammaln(1.0 - half + cancel) - special.gammaln(cancel)
    return float((2.0 * math.pi * lam) ** half * math.exp(log_ratio) / (alpha - 2.0))


def sic_interference_mean_campbell(lam: float, alpha: float, cancel: int) -> float:
    """Exact mean of the interference beyond the L-th nearest interferer.

    Campbell's theorem gives 2 pi lam r**(2 - alpha) / (alpha - 2) given the
    L-th distance r; averaging over lam pi r^2 ~ Gamma(L, 1) yields
    2 (lam pi)**(alpha/2) Gamma(L + 1 - alpha/2) / ((alpha - 2) Gamma(L)).
    """
    require_density(lam)
    require_alpha(alpha)
    _require_cancel_for_mean(alpha, cancel)
    half = alpha / 2.0
    log_ratio = special.gammaln(cancel + 1.0 - half) - special.gammaln(cancel)
    return float(2.0 * (lam * math.pi) ** half * math.exp(log_ratio) / (alpha - 2.0))


def bounded_pl_mean_interference(lam: float, alpha: float) -> float:
    """Campbell mean of interference under min(1, x**-alpha): 2 pi lam (1/2 + 1/(alpha - 2))."""
    require_density(lam)
    require_alpha(alpha)
    return 2.0 * math.pi * lam * (0.5 + 1.0 / (alpha - 2.0))


def corr_log_gain(eigenvalues: Sequence[float]) -> float:
    """Lower bound on E[ln H] for a correlated direct gain, in nats.

    ln r + (1/r) sum ln mu_n - gamma, with r the number of positive
    eigenvalues.
    """
    mu = np.asarray(eigenvalues, dtype=np.float64)
    require(
        mu.size > 0 and bool(np.all(mu > 0.0)),
        "eigenvalues must be positive",
        parameter="eigenvalues",
        value=tuple(mu),
        condition="mu_n > 0",
    )
    return math.log(mu.size) + float(np.mean(np.log(mu))) - EULER_GAMMA


def expected_log_gain(n_rx: int) -> float:
    """E[ln H] = psi(N_r) for H ~ Gamma(N_r, 1)."""
    require(n_rx >= 1, f"N_r must be >= 1, got {n_rx}", parameter="n_rx", value=n_rx, condition="N_r >= 1")
    return float(special.digamma(n_rx))


def link_distance_moment(comm_range: float, p: float) -> float:
    """E[d**p] for d with density 2d / (R_d^2 - 1) on [1, R_d]."""
    require(comm_range > 1.0, f"R_d must exceed 1, got {comm_range}", parameter="comm_range", value=comm_range, condition="R_d > 1")
    r2m1 = comm_range * comm_range - 1.0
    if p == -2.0:
        return 2.0 * math.log(comm_range) / r2m1
    return 2.0 * (comm_range ** (p + 2.0) - 1.0) / ((p + 2.0) * r2m1)


def link_distance_log_mean(comm_range: float) -> float:
    """E[ln d] = R_d^2 ln R_d / (R_d^2 - 1) - 1/2 under the annulus law."""
    require(comm_range > 1.0, f"R_d must exceed 1, got {comm_range}", parameter="comm_range", value=comm_range, condition="R_d > 1")
    r2 = comm_range * comm_range
    return r2 * math.log(comm_range) / (r2 - 1.0) - 0.5


def gamma_ratio(x: float, s: float) -> float:
    """Gamma(x + s) / Gamma(x) for x > 0, x + s > 0, via log-gamma."""
    require(x > 0.0 and x + s > 0.0, "gamma ratio needs positive arguments", parameter="x", value=(x, s), condition="x > 0, x + s > 0")
    return math.exp(float(special.gammaln(x + s) - special.gammaln(x)))
