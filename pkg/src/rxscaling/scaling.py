"""Density sweeps with N_r = ceil(c * lambda**beta) and scaling-exponent fits.

Example:
    >>> import numpy as np
    >>> from rxscaling import SweepSpec
    >>> from rxscaling.scaling import fit_asymptotic_exponent, run_sweep
    >>>
    >>> spec = SweepSpec(densities=tuple(np.logspace(-0.5, 2, 8)), c=4, beta=0, methods=("exact",))
    >>> fit = fit_asymptotic_exponent(run_sweep(spec), "exact")
    >>> round(fit.slope)
    -2
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from pydantic import ValidationError
from scipy import stats

from ._exceptions import InsufficientDataError, RxScalingError
from ._types import FitAgainst, PathLossModel, ReceiverKind, Regime, SweepMethod
from ._utils import _is_logging_enabled, logger, require
from .analytic.bounds import (
    bounded_pl_lower_bound,
    mrc_lower_bound,
    mrc_upper_bound,
    sic_lower_bound,
    sic_upper_bound,
)
from .analytic.exact import mrc_sum_se_exact, sic_sum_se_exact
from .simulator import estimate_sum_se
from .types.channel import Receiver
from .types.network import NetworkConfig
from .types.sweep import ExponentFit, SweepResult, SweepRow, SweepSpec

__all__ = [
    "antenna_count",
    "run_sweep",
    "fit_asymptotic_exponent",
    "critical_beta",
    "classify_regime",
]

MIN_FIT_POINTS = 4


def antenna_count(density: float, c: float, beta: float, cap: int) -> tuple[int, bool]:
    """N_r = ceil(c * lambda**beta), at least 1 and at most ``cap``.

    Returns:
        ``(n_rx, capped)`` where ``capped`` tells whether the cap was applied.
    """
    wanted = max(1, math.ceil(c * density**beta))
    if wanted > cap:
        return cap, True
    return wanted, False


def _evaluate(
    method: SweepMethod,
    cfg: NetworkConfig,
    receiver: Receiver,
    spec: SweepSpec,
    index: int,
) -> dict[str, float | int | None]:
    """Value and provenance of one method at one grid point."""
    if method == "mc":
        seed = spec.seed + index
        est = estimate_sum_se(cfg, receiver, None, spec.n_realizations, seed)
        return {
            "value": est.sum_se,
            "stderr": est.sum_stderr,
            "n_realizations": est.n_realizations,
            "seed": seed,
        }
    if method == "exact":
        if receiver.cancel == 0:
            exact = mrc_sum_se_exact(cfg)
        else:
            exact = sic_sum_se_exact(cfg, receiver.cancel)
        return {"value": exact.value, "abs_err": exact.abs_error_estimate}

    bound_cfg = cfg.interference_limited()
    if method == "lower":
        if receiver.kind == "zfsic":
            bound = sic_lower_bound(bound_cfg, receiver.cancel)
        elif cfg.pathloss == "bounded":
            bound = bounded_pl_lower_bound(bound_cfg)
        else:
            bound = mrc_lower_bound(bound_cfg)
    else:
        bound = sic_upper_bound(bound_cfg) if receiver.kind == "zfsic" else mrc_upper_bound(bound_cfg)
    return {"value": bound.value}


def _evaluate_point(spec: SweepSpec, index: int) -> list[SweepRow]:
    density = spec.densities[index]
    n_rx, capped = antenna_count(density, spec.c, spec.beta, spec.n_rx_cap)
    if capped and _is_logging_enabled():
        logger.warning("sweep: N_r capped at %d for lambda=%g", n_rx, density)
    receiver = Receiver.mrc() if spec.receiver == "mrc" else Receiver.zfsic(n_rx - 1)

    rows: list[SweepRow] = []
    cfg: NetworkConfig | None = None
    setup_error: str | None = None
    try:
        updates: dict[str, float | int] = {"density": density, "n_rx": n_rx}
        if spec.interference_limited:
            updates["noise_power_mw"] = 0.0
        cfg = spec.base.with_updates(**updates)
    except (RxScalingError, ValidationError) as exc:
        setup_error = str(exc)

    for method in spec.methods:
        base_row = {
            "density": density,
            "n_rx": n_rx,
            "receiver": receiver.label,
            "cancel": receiver.cancel,
            "method": method,
            "capped": capped,
        }
        if cfg is None:
            rows.append(SweepRow(**base_row, error=setup_error))
            continue
        try:
            values = _evaluate(method, cfg, receiver, spec, index)
        except RxScalingError as exc:
            if _is_logging_enabled():
                logger.warning("sweep: %s failed at lambda=%g: %s", method, density, exc)
            rows.append(SweepRow(**base_row, error=str(exc)))
            continue
        rows.append(SweepRow(**base_row, **values))
    return rows


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate every requested method at every grid point.

    Bound methods always use sigma^2 = 0. A method that fails at a point
    produces a row with ``value=None`` and the error message; the sweep
    continues. Monte Carlo point i uses seed ``spec.seed + i``. Rows come
    back in grid order then method order for any ``spec.workers``.

    Args:
        spec: The sweep.

    Returns:
        One row per (grid point, method) with the spec fingerprint.
    """
    indices = range(len(spec.densities))
    if spec.workers > 1:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            per_point = list(pool.map(lambda i: _evaluate_point(spec, i), indices))
    else:
        per_point = [_evaluate_point(spec, i) for i in indices]
    rows = tuple(row for point in per_point for row in point)
    return SweepResult(spec=spec, rows=rows, fingerprint=spec.fingerprint())


def _top_half_window(densities: tuple[float, ...]) -> tuple[float, float]:
    log_lo, log_hi = math.log(densities[0]), math.log(densities[-1])
    return math.exp(0.5 * (log_lo + log_hi)), densities[-1]


def fit_asymptotic_exponent(
    result: SweepResult,
    method: SweepMethod = "exact",
    *,
    against: FitAgainst = "log",
    window: tuple[float, float] | None = None,
) -> ExponentFit:
    """Least-squares fit of the per-link SE over the asymptotic window.

    ``against="log"`` regresses ln(per-link SE) on ln(lambda) (the power-law
    slope); ``against="linear"`` regresses per-link SE on ln(lambda).

    Args:
        result: A finished sweep.
        method: Which rows to fit.
        against: Regression form.
        window: Inclusive density range; defaults to the top half of the grid
            on a log scale.

    Returns:
        Slope, intercept, slope standard error, R^2 and residuals.

    Raises:
        InsufficientDataError: Fewer than 4 usable points in the window.
    """
    lo, hi = window if window is not None else _top_half_window(result.spec.densities)
    # Grid values can sit a few ulps off the window edges
    slack = 1e-12
    points = [
        (lam, se)
        for lam, se in result.per_link(method)
        if lo * (1.0 - slack) <= lam <= hi * (1.0 + slack) and (against == "linear" or se > 0.0)
    ]
    if len(points) < MIN_FIT_POINTS:
        raise InsufficientDataError(
            f"need at least {MIN_FIT_POINTS} points in [{lo:g}, {hi:g}], got {len(points)}",
            parameter="window",
            value=(lo, hi),
            condition=f">= {MIN_FIT_POINTS} grid points",
        )
    x = np.log([lam for lam, _ in points])
    se = np.array([value for _, value in points])
    y = np.log(se) if against == "log" else se

    if float(np.ptp(y)) == 0.0:
        slope, intercept, stderr, r_squared = 0.0, float(y[0]), 0.0, math.nan
    else:
        fit = stats.linregress(x, y)
        slope, intercept = float(fit.slope), float(fit.intercept)
        stderr, r_squared = float(fit.stderr), float(fit.rvalue) ** 2
    residuals = y - (slope * x + intercept)
    return ExponentFit(
        slope=slope,
        intercept=intercept,
        stderr=stderr,
        r_squared=r_squared,
        against=against,
        window=(points[0][0], points[-1][0]),
        n_points=len(points),
        residuals=tuple(float(r) for r in residuals),
    )


def critical_beta(
    receiver_kind: ReceiverKind, alpha: float, pathloss: PathLossModel = "unbounded"
) -> float:
    """Antenna-scaling exponent at which the sum SE grows linearly with density.

    alpha/2 for MRC under x**-alpha, 1 for ZF-SIC, and 1 for MRC under the
    bounded law min(1, x**-alpha).
    """
    require(alpha > 2.0, f"path-loss exponent must exceed 2, got {alpha}", parameter="alpha", value=alpha, condition="alpha > 2")
    if receiver_kind == "mrc" and pathloss == "unbounded":
        return alpha / 2.0
    return 1.0


def classify_regime(
    beta: float,
    receiver_kind: ReceiverKind,
    alpha: float,
    pathloss: PathLossModel = "unbounded",
) -> Regime:
    """Place (beta, receiver) in the regime map.

    Below the critical exponent the per-link SE vanishes and the sum SE grows
    sub-linearly (or decays); at it the sum SE is linear in density; above it
    the sum SE grows like lambda log(lambda).
    """
    critical = critical_beta(receiver_kind, alpha, pathloss)
    if math.isclose(beta, critical, rel_tol=1e-12, abs_tol=1e-12):
        return "linear"
    return "vanishing" if beta < critical else "superlinear"
