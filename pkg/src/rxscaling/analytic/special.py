"""Special functions used by the analytic expressions.

Thin, domain-checked wrappers over :mod:`scipy.special`, plus the single
Gauss hypergeometric family the residual-interference kernels need,
2F1(1, 1 - 2/alpha; 2 - 2/alpha; -v) for v >= 0.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate, special

from .._constants import EULER_GAMMA
from .._exceptions import InvalidParameterError
from .._utils import require, require_alpha

__all__ = [
    "EULER_GAMMA",
    "sinc",
    "sine_integral",
    "cosine_integral",
    "gamma_function",
    "log_gamma",
    "digamma",
    "bessel_i",
    "bessel_k",
    "hyp2f1_family",
    "hyp2f1_family_integral",
]


def sinc(x: float) -> float:
    """Normalised sinc, sin(pi x) / (pi x), with sinc(0) = 1."""
    return float(np.sinc(x))


def sine_integral(z: float) -> float:
    """Si(z) = integral of sin(t)/t over [0, z]."""
    si, _ = special.sici(z)
    return float(si)


def cosine_integral(z: float) -> float:
    """Ci(z) for z > 0."""
    require(z > 0.0, f"Ci is defined for z > 0, got {z}", parameter="z", value=z, condition="z > 0")
    _, ci = special.sici(z)
    return float(ci)


def _require_not_pole(x: float, name: str) -> None:
    if x <= 0.0 and float(x).is_integer():
        raise InvalidParameterError(
            f"{name} has a pole at {x}",
            parameter="x",
            value=x,
            condition="x not in {0, -1, -2, ...}",
        )


def gamma_function(x: float) -> float:
    """Gamma(x), rejecting the poles at non-positive integers."""
    _require_not_pole(x, "Gamma")
    return float(special.gamma(x))


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    require(x > 0.0, f"ln Gamma needs x > 0, got {x}", parameter="x", value=x, condition="x > 0")
    return float(special.gammaln(x))


def digamma(x: float) -> float:
    """psi(x) = d/dx ln Gamma(x); psi(1) = -gamma, psi(n) = -gamma + H_(n-1)."""
    _require_not_pole(x, "digamma")
    return float(special.digamma(x))


def bessel_i(order: float, x: float, *, scaled: bool = False) -> float:
    """Modified Bessel function of the first kind, I_order(x).

    With ``scaled=True`` returns exp(-|x|) I_order(x), which stays finite for
    large arguments.
    """
    require(x >= 0.0, f"I_L is evaluated for x >= 0, got {x}", parameter="x", value=x, condition="x >= 0")
    return float(special.ive(order, x) if scaled else special.iv(order, x))


def bessel_k(order: float, x: float, *, scaled: bool = False) -> float:
    """Modified Bessel function of the second kind, K_order(x), for x > 0.

    With ``scaled=True`` returns exp(x) K_order(x).
    """
    require(x > 0.0, f"K_L is defined for x > 0, got {x}", parameter="x", value=x, condition="x > 0")
    return float(special.kve(order, x) if scaled else special.kv(order, x))


def hyp2f1_family(alpha: float, v: float) -> float:
    """2F1(1, 1 - delta; 2 - delta; -v) with delta = 2/alpha, for v >= 0.

    Inside the unit disk the series (scipy's ``hyp2f1``) is used. For v > 1
    the function is rewritten through the regularised incomplete beta
    function,

        (1 - delta) / (delta sinc(delta)) * v**(delta - 1)
            * I_{v/(1+v)}(1 - delta, delta),

    which stays accurate for arbitrarily large v.

    Example:
        >>> abs(hyp2f1_family(4.0, 1.0) - math.atan(1.0)) < 1e-14
        True
    """
    require_alpha(alpha)
    require(v >= 0.0, f"v must be non-negative, got {v}", parameter="v", value=v, condition="v >= 0")
    delta = 2.0 / alpha
    if v <= 1.0:
        return float(special.hyp2f1(1.0, 1.0 - delta, 2.0 - delta, -v))
    x = v / (1.0 + v)
    prefactor = (1.0 - delta) / (delta * sinc(delta))
    return float(prefactor * v ** (delta - 1.0) * special.betainc(1.0 - delta, delta, x))


def hyp2f1_family_integral(alpha: float, v: float) -> float:
    """Same family from Euler's integral, (1 - delta) * int_0^1 t**-delta / (1 + v t) dt.

    Uses QUADPACK's algebraic-weight rule for the endpoint singularity. Kept
    as an independent evaluation route for cross-checks.
    """
    require_alpha(alpha)
    require(v >= 0.0, f"v must be non-negative, got {v}", parameter="v", value=v, condition="v >= 0")
    delta = 2.0 / alpha
    value, _ = integrate.quad(
        lambda t: 1.0 / (1.0 + v * t),
        0.0,
        1.0,
        weight="alg",
        wvar=(-delta, 0.0),
        epsabs=0.0,
        epsrel=1e-13,
        limit=200,
    )
    return float((1.0 - delta) * value)


def harmonic_digamma(n: int) -> float:
    """psi(n) for a positive integer from the harmonic series."""
    require(n >= 1, f"n must be a positive integer, got {n}", parameter="n", value=n, condition="n >= 1")
    return -EULER_GAMMA + math.fsum(1.0 / k for k in range(1, n))
