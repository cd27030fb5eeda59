"""Laplace-transform kernels of the signal and interference powers."""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from .._constants import DEFAULT_QUADRATURE, HYP2F1_CROSS_CHECK_TOL, QuadratureConfig
from .._exceptions import QuadratureError
from .._types import TailMethod
from .._utils import require, require_alpha, require_density
from .quadrature import integrate, integrate_pieces
from .special import hyp2f1_family, sinc

__all__ = [
    "laplace_interference",
    "gamma_signal_complement",
    "correlated_signal_complement",
    "interference_tail_integral",
    "sic_laplace",
    "sic_laplace_bessel_bound",
]


def laplace_interference(z: float, lam: float, alpha: float, d: float = 1.0) -> float:
    """Laplace transform of d**alpha * I for a Poisson field with Exp(1) marks.

    Returns exp(-lam * pi * d**2 * z**(2/alpha) / sinc(2/alpha)); ``d = 1``
    gives the transform of I itself.
    """
    require(z >= 0.0, f"z must be non-negative, got {z}", parameter="z", value=z, condition="z >= 0")
    delta = 2.0 / alpha
    return math.exp(-lam * math.pi * d * d * z**delta / sinc(delta))


def gamma_signal_complement(n_rx: int, s: ArrayLike) -> np.ndarray:
    """1 - (1 + s)**-n_rx, evaluated without cancellation."""
    s = np.asarray(s, dtype=np.float64)
    return -np.expm1(-n_rx * np.log1p(s))


def correlated_signal_complement(eigenvalues: ArrayLike, s: float) -> float:
    """1 - prod_n 1 / (1 + mu_n s) for the correlated direct gain."""
    mu = np.asarray(eigenvalues, dtype=np.float64)
    return float(-np.expm1(-np.sum(np.log1p(mu * s))))


def interference_tail_integral(
    r: float,
    z: float,
    alpha: float,
    method: TailMethod = "hyp2f1",
    quad: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """int_{r^2}^inf du / (1 + u**(alpha/2) / z).

    This is the per-density exponent of the Laplace transform of the
    interference from beyond distance r. The ``hyp2f1`` route uses

        2 z r**(2 - alpha) / (alpha - 2) * 2F1(1, 1 - 2/alpha; 2 - 2/alpha; -z r**-alpha),

    the ``quadrature`` route integrates directly. With ``quad.cross_check``
    both are computed and must agree.
    """
    require_alpha(alpha)
    require(r >= 0.0, f"r must be non-negative, got {r}", parameter="r", value=r, condition="r >= 0")
    if z <= 0.0:
        return 0.0
    delta = 2.0 / alpha
    if method == "quadrature":
        half = alpha / 2.0
        split = max(r * r, z**delta)

        def integrand(u: float) -> float:
            return 1.0 / (1.0 + u**half / z)

        # u = split * s**(-1/(half - 1)) maps [split, inf) onto (0, 1] with a bounded integrand
        power = half / (half - 1.0)
        weight = split**half / z

        def mapped(s: float) -> float:
            return split / (half - 1.0) / (s**power + weight)

        head, _ = integrate(integrand, r * r, split, quad, label="tail_integral")
        tail, _ = integrate(mapped, 0.0, 1.0, quad, label="tail_integral")
        return head + tail

    if r == 0.0:
        value = z**delta / sinc(delta)
    else:
        v = z * r**-alpha
        value = 2.0 * z * r ** (2.0 - alpha) / (alpha - 2.0) * hyp2f1_family(alpha, v)
    if quad.cross_check:
        check = interference_tail_integral(r, z, alpha, "quadrature", quad)
        if abs(check - value) > HYP2F1_CROSS_CHECK_TOL * max(abs(value), 1e-300):
            raise QuadratureError(
                f"tail integral disagreement at r={r}, z={z}: {value} vs {check}",
                partial_estimate=value,
                abs_error=abs(check - value),
            )
    return value


def _gamma_window(shape: int) -> list[float]:
    spread = 12.0 * math.sqrt(shape) + 12.0
    return [0.0, max(0.0, shape - spread), float(shape), shape + spread]


def sic_laplace(
    cancel: int,
    z: float,
    lam: float,
    alpha: float,
    quad: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Laplace transform of the interference left after cancelling the L nearest.

    Averages exp(-pi lam T(r, z)) over the L-th nearest distance r, whose
    density is 2 (lam pi r^2)**L exp(-lam pi r^2) / (r Gamma(L)). The average
    is taken over s = lam pi r^2 ~ Gamma(L, 1).

    Args:
        cancel: Interferers cancelled, L >= 1.
        z: Transform argument, z >= 0.
        lam: Density.
        alpha: Path-loss exponent.
        quad: Tolerances (``cross_check`` validates every tail integral).

    Returns:
        A value in (0, 1].
    """
    require(cancel >= 1, f"L must be at least 1, got {cancel}", parameter="L", value=cancel, condition="L >= 1")
    require(z >= 0.0, f"z must be non-negative, got {z}", parameter="z", value=z, condition="z >= 0")
    require_density(lam)
    require_alpha(alpha)
    if z == 0.0:
        return 1.0
    log_norm = float(special.gammaln(cancel))
    lam_pi = lam * math.pi

    def integrand(s: float) -> float:
        if s <= 0.0:
            if cancel > 1:
                return 0.0
            return math.exp(-lam_pi * interference_tail_integral(0.0, z, alpha, "hyp2f1", quad))
        density = math.exp((cancel - 1) * math.log(s) - s - log_norm)
        if density == 0.0:
            return 0.0
        r = math.sqrt(s / lam_pi)
        return math.exp(-lam_pi * interference_tail_integral(r, z, alpha, "hyp2f1", quad)) * density

    value, _ = integrate_pieces(integrand, _gamma_window(cancel), quad, label="sic_laplace")
    return min(1.0, value)


def sic_laplace_bessel_bound(cancel: int, z: float, lam: float) -> float:
    """Jensen lower bound on :func:`sic_laplace` for alpha = 4.

    Replacing the residual interference by its conditional mean pi lam / r^2
    gives 2 b**(L/2) K_L(2 sqrt(b)) / Gamma(L) with b = z (lam pi)**2, K_L the
    modified Bessel function of the second kind.
    """
    require(cancel >= 1, f"L must be at least 1, got {cancel}", parameter="L", value=cancel, condition="L >= 1")
    require(z >= 0.0, f"z must be non-negative, got {z}", parameter="z", value=z, condition="z >= 0")
    require_density(lam)
    if z == 0.0:
        return 1.0
    b = z * (lam * math.pi) ** 2
    x = 2.0 * math.sqrt(b)
    scaled = float(special.kve(cancel, x))
    if not math.isfinite(scaled) or scaled <= 0.0:
        return 1.0
    log_value = (
        math.log(2.0)
        + 0.5 * cancel * math.log(b)
        + math.log(scaled)
        - x
        - float(special.gammaln(cancel))
    )
    return min(1.0, math.exp(log_value))
