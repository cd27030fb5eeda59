"""Adaptive quadrature plumbing and the ergodic-rate integral.

All integrals go through :func:`integrate`, a QUADPACK wrapper that turns an
unmet tolerance into :class:`QuadratureError`. Semi-infinite ranges are split
at caller-supplied breakpoints so each piece sees one feature of the
integrand (signal transition, interference decay, noise cut-off).
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from scipy import integrate as scipy_integrate

from .._constants import DEFAULT_QUADRATURE, QuadratureConfig
from .._exceptions import QuadratureError
from .._utils import _is_logging_enabled, logger, require

__all__ = [
    "ErrorLedger",
    "integrate",
    "integrate_pieces",
    "hamdi_ergodic",
]

LN2 = math.log(2.0)

# Roundoff-limited QUADPACK results are accepted up to this multiple of the
# requested tolerance.
_ROUNDOFF_SLACK = 1e3


@dataclass
class ErrorLedger:
    """Tracks the worst relative error of inner integrals in a nested evaluation."""

    max_relative: float = 0.0

    def record(self, value: float, abserr: float) -> None:
        if value != 0.0:
            self.max_relative = max(self.max_relative, abserr / abs(value))


def integrate(
    func: Callable[[float], float],
    a: float,
    b: float,
    quad: QuadratureConfig = DEFAULT_QUADRATURE,
    *,
    label: str = "integral",
    ledger: ErrorLedger | None = None,
) -> tuple[float, float]:
    """Integrate ``func`` over [a, b] (b may be ``math.inf``).

    Args:
        func: Scalar integrand.
        a: Lower limit.
        b: Upper limit.
        quad: Tolerances.
        label: Name used in error messages.
        ledger: Receives this call's relative error when given.

    Returns:
        ``(value, abserr)``.

    Raises:
        QuadratureError: If QUADPACK stops short of the tolerance.
    """
    if a == b:
        return 0.0, 0.0
    result = scipy_integrate.quad(
        func,
        a,
        b,
        epsabs=quad.abs_tol,
        epsrel=quad.rel_tol,
        limit=quad.max_subdivisions,
        full_output=1,
    )
    value, abserr = float(result[0]), float(result[1])
    if not math.isfinite(value):
        raise QuadratureError(
            f"{label}: non-finite value on [{a}, {b}]",
            partial_estimate=value,
            abs_error=abserr,
        )
    if len(result) > 3:
        tolerance = max(quad.abs_tol, quad.rel_tol * abs(value))
        message = str(result[3]).strip().splitlines()[0]
        if abserr > _ROUNDOFF_SLACK * tolerance:
            raise QuadratureError(
                f"{label}: {message} on [{a}, {b}]",
                partial_estimate=value,
                abs_error=abserr,
            )
        if _is_logging_enabled():
            logger.warning(
                "%s: accepted roundoff-limited result %.6g (abserr %.2g) on [%g, %g]",
                label,
                value,
                abserr,
                a,
                b,
            )
    if ledger is not None:
        ledger.record(value, abserr)
    return value, abserr


def integrate_pieces(
    func: Callable[[float], float],
    breakpoints: Sequence[float],
    quad: QuadratureConfig = DEFAULT_QUADRATURE,
    *,
    label: str = "integral",
    ledger: ErrorLedger | None = None,
) -> tuple[float, float]:
    """Integrate over [b_0, b_1] + ... + [b_n, inf) using sorted, de-duplicated breakpoints."""
    points = sorted({float(p) for p in breakpoints if math.isfinite(p) and p >= 0.0})
    if not points:
        points = [0.0]
    total, error = 0.0, 0.0
    for lo, hi in zip(points, [*points[1:], math.inf]):
        value, abserr = integrate(func, lo, hi, quad, label=label)
        total += value
        error += abserr
    if ledger is not None:
        ledger.record(total, error)
    return total, error


def _kernel_point(z: float, quad: QuadratureConfig) -> float:
    return max(z, quad.series_cutoff)


def hamdi_ergodic(
    laplace_x: Callable[[float], float],
    laplace_y: Callable[[float], float],
    a: float = 0.0,
    quad: QuadratureConfig = DEFAULT_QUADRATURE,
    *,
    kappa: float | None = None,
    alpha: float | None = None,
    breakpoints: Sequence[float] = (),
    in_bits: bool = True,
) -> float:
    """E[log(1 + X / (Y + a))] from the Laplace transforms of X and Y.

    Evaluates

        int_0^inf exp(-a z) / z * (1 - L_X(z)) * L_Y(z) dz

    for independent non-negative X and Y. With ``kappa`` and ``alpha`` the
    integral is taken over u = kappa * z**(2/alpha), which maps the
    interference decay of a Poisson field to u of order one.

    Args:
        laplace_x: Laplace transform of X.
        laplace_y: Laplace transform of Y.
        a: Deterministic offset in the denominator (>= 0).
        quad: Tolerances.
        kappa: Scale of the power-law substitution.
        alpha: Exponent of the power-law substitution.
        breakpoints: Extra split points in the integration variable.
        in_bits: Return bits (True) or nats.

    Returns:
        The per-link value.

    Raises:
        QuadratureError: If the integral does not converge.

    Example:
        >>> value = hamdi_ergodic(lambda z: 1 / (1 + z), lambda z: 1.0, 1.0, in_bits=False)
        >>> round(value, 8)
        0.59634736
    """
    require(a >= 0.0, f"offset must be non-negative, got {a}", parameter="a", value=a, condition="a >= 0")
    scale = 1.0 / LN2 if in_bits else 1.0

    if kappa is None or alpha is None:

        def integrand(z: float) -> float:
            zk = _kernel_point(z, quad)
            signal = 1.0 - laplace_x(zk)
            if signal <= 0.0:
                return 0.0
            return math.exp(-a * z) * signal * laplace_y(z) / zk

        value, _ = integrate_pieces(integrand, [0.0, 1.0, *breakpoints], quad, label="hamdi_ergodic")
        return scale * value

    half_alpha = alpha / 2.0

    def integrand_u(u: float) -> float:
        if u <= 0.0:
            return 0.0
        z = (u / kappa) ** half_alpha
        signal = 1.0 - laplace_x(_kernel_point(z, quad))
        if signal <= 0.0:
            return 0.0
        return math.exp(-a * z) * signal * laplace_y(z) / u

    value, _ = integrate_pieces(
        integrand_u, [0.0, 1.0, *breakpoints], quad, label="hamdi_ergodic"
    )
    return scale * half_alpha * value
