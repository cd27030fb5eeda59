"""Monte Carlo versus analytic acceptance battery behind ``rxscaling validate``.

Each check returns a :class:`CheckResult`; an exception inside a check is
reported as a failure of that check, never as a crash of the battery.
``quick=True`` shrinks grids and realization counts so the battery finishes
in a minute or two.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from ._constants import DEFAULT_SEED
from ._exceptions import InvalidParameterError, RxScalingError
from ._utils import logger
from .analytic import (
    bessel_i,
    bounded_pl_lower_bound,
    bounded_pl_mean_interference,
    corr_sum_se_lower,
    digamma,
    gamma_ratio,
    harmonic_digamma,
    hyp2f1_family,
    hyp2f1_family_integral,
    mrc_closed_form_siso,
    mrc_lower_bound,
    mrc_sum_se_exact,
    mrc_sum_se_fixed_distance,
    mrc_upper_bound,
    sic_lower_bound,
    sic_sum_se_exact,
    sic_upper_bound,
    sine_integral,
)
from .channel import correlation_eigenvalues
from .scaling import fit_asymptotic_exponent, run_sweep
from .simulator import estimate_mean_interference, estimate_negative_moment, estimate_sum_se
from .types.channel import CorrelationSpec, Receiver
from .types.network import NetworkConfig
from .types.sweep import SweepSpec

__all__ = ["CheckResult", "CHECKS", "run_validation"]

SISO_CONSTANT = 0.5772
# R_sim for Monte Carlo versus exact comparisons, in units of R_d
MC_WINDOW_FACTOR = 40.0


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one acceptance check."""

    name: str
    passed: bool
    detail: str


def _mc_window(cfg: NetworkConfig) -> NetworkConfig:
    return cfg.with_updates(sim_radius=max(cfg.radius, MC_WINDOW_FACTOR * cfg.comm_range))


def check_siso_constant(cfg: NetworkConfig, quick: bool) -> CheckResult:
    """Closed-form SISO rate at d = 1/sqrt(lam pi) and its quadrature counterpart."""
    worst = 0.0
    for lam in (1e-5, 1e-4, 1e-3):
        d = 1.0 / math.sqrt(lam * math.pi)
        closed = mrc_closed_form_siso(lam, d)
        siso = NetworkConfig(density=lam, alpha=4.0, n_rx=1, noise_power_mw=0.0, comm_range=cfg.comm_range)
        quadrature = mrc_sum_se_fixed_distance(siso, d).per_link
        worst = max(worst, abs(closed - SISO_CONSTANT), abs(quadrature - closed))
    return CheckResult("siso_constant", worst <= 1e-3, f"max deviation {worst:.2e}")


def _mc_against_exact(
    name: str,
    cfg: NetworkConfig,
    n_rx_values: tuple[int, ...],
    densities: tuple[float, ...],
    n_realizations: int,
    exact_for: Callable[[NetworkConfig], tuple[float, float]],
    receiver_for: Callable[[int], Receiver],
) -> CheckResult:
    failures: list[str] = []
    worst = 0.0
    for index, (n_rx, lam) in enumerate((n, lam) for n in n_rx_values for lam in densities):
        point = _mc_window(cfg).with_updates(density=lam, n_rx=n_rx)
        est = estimate_sum_se(point, receiver_for(n_rx), None, n_realizations, DEFAULT_SEED + index)
        exact, abs_err = exact_for(point)
        gap = abs(est.per_link_se - exact)
        relative = gap / exact
        worst = max(worst, relative)
        if gap > 3.0 * est.stderr + abs_err or relative > 0.03:
            failures.append(f"N_r={n_rx} lam={lam:g}: mc={est.per_link_se:.5f} exact={exact:.5f}")
    detail = "; ".join(failures) if failures else f"max relative gap {worst:.2%}"
    return CheckResult(name, not failures, detail)


def check_mrc_agreement(cfg: NetworkConfig, quick: bool) -> CheckResult:
    """MRC Monte Carlo against the exact integral."""

    def exact(point: NetworkConfig) -> tuple[float, float]:
        value = mrc_sum_se_exact(point)
        return value.per_link, value.abs_error_estimate / point.density

    return _mc_against_exact(
        "mrc_mc_vs_exact",
        cfg,
        (4,) if quick else (1, 2, 4, 8),
        (5e-5,) if quick else (1e-5, 5e-5, 1e-4),
        20_000 if quick else 200_000,
        exact,
        lambda n: Receiver.mrc(),
    )


def check_sic_agreement(cfg: NetworkConfig, quick: bool) -> CheckResult:
    """ZF-SIC(N_r - 1) Monte Carlo against the exact integral, and ZF-SIC(0) against MRC."""
    point = cfg.with_updates(n_rx=4)
    mrc = estimate_sum_se(point, Receiver.mrc(), None, 500, DEFAULT_SEED)
    zf0 = estimate_sum_se(point, Receiver.zfsic(0), None, 500, DEFAULT_SEED)
    if mrc.per_link_se != zf0.per_link_se:
        return CheckResult("sic_mc_vs_exact", False, "ZF-SIC(0) differs from MRC under a shared seed")

    def exact(p: NetworkConfig) -> tuple[float, float]:
        value = sic_sum_se_exact(p, p.n_rx - 1)
        return value.per_link, value.abs_error_estimate / p.density

    return _mc_against_exact(
        "sic_mc_vs_exact",
        cfg,
        (4,) if quick else (2, 4, 8),
        (5e-5,) if quick else (1e-5, 5e-5, 1e-4),
        20_000 if quick else 200_000,
        exact,
        lambda n: Receiver.zfsic(n - 1),
    )


def check_bound_sandwich(cfg: NetworkConfig, quick: bool) -> CheckResult:
    """lower <= exact <= upper for MRC and ZF-SIC with sigma^2 = 0."""
    densities = (1e-4, 1e-3) if quick else (1e-5, 3e-5, 1e-4, 3e-4, 1e-3)
    antennas = (4, 8) if quick else (4, 6, 8, 12)
    base = cfg.with_updates(pathloss="unbounded").interference_limited()
    violations: list[str] = []
    checked = 0
    for lam in densities:
        for n_rx in antennas:
            point = base.with_updates(density=lam, n_rx=n_rx)
            mrc = mrc_sum_se_exact(point)
            if not mrc_lower_bound(point).value <= mrc.value + mrc.abs_error_estimate:
                violations.append(f"mrc lower lam={lam:g} N_r={n_rx}")
            if not mrc.value - mrc.abs_error_estimate <= mrc_upper_bound(point).value:
                violations.append(f"mrc upper lam={lam:g} N_r={n_rx}")
            checked += 2
            try:
                lower = sic_lower_bound(point)
            except InvalidParameterError:
                continue
            sic = sic_sum_se_exact(point, n_rx - 1)
            if not lower.value <= sic.value + sic.abs_error_estimate:
                violations.append(f"sic lower lam={lam:g} N_r={n_rx}")
            if not sic.value - sic.abs_error_estimate <= sic_upper_bound(point).value:
                violations.append(f"sic upper lam={lam:g} N_r={n_rx}")
            checked += 2
    detail = "; ".join(violations) if violations else f"{checked} comparisons"
    return CheckResult("bound_sandwich", not violations, detail)


def check_negative_moment(cfg: NetworkConfig, quick: bool) -> CheckResult:
    """Monte Carlo E[1/I] within 5% of the closed form."""
    alphas = (4.0,) if quick else (3.0, 4.0)
    failures: list[str] = []
    worst = 0.0
    for alpha in alphas:
        for lam in (1e-4, 1e-3):
            point = cfg.with_updates(alpha=alpha, density=lam, pathloss="unbounded")
            est = estimate_negative_moment(point, 20_000, DEFAULT_SEED)
            worst = max(worst, abs(est.relative_error))
            if abs(est.relative_error) > 0.05:
                failures.append(f"alpha={alpha:g} lam={lam:g}: {est.relative_error:+.2%}")
    detail = "; ".join(failures) if failures else f"max relative error {worst:.2%}"
    return CheckResult("negative_moment", not failures, detail)


def _plateau_spread(spec: SweepSpec) -> float:
    result = run_sweep(spec)
    top = [se for lam, se in result.per_link("exact") if lam >= spec.densities[-1] / 10.0 * (1.0 - 1e-12)]
    if len(top) < 2:
        raise RxScalingError("plateau window holds fewer than two evaluated points")
    return (max(top) - min(top)) / max(top)


def _scaling_grids(quick: bool) -> tuple[tuple[float, ...], tuple[float, ...], tuple[float, ...]]:
    """Plateau, slope and super-linear density grids.

    Every fit window holds at least four grid points in both modes.
    """

    def grid(lo: float, hi: float, points: int) -> tuple[float, ...]:
        return tuple(float(v) for v in np.logspace(lo, hi, points))

    return (
        grid(-3.5, -1.0, 6 if quick else 11),
        grid(-0.5, 2.0, 8 if quick else 11),
        grid(-4.0, -3.0, 7 if quick else 9),
    )


def check_scaling(cfg: NetworkConfig, quick: bool) -> CheckResult:
    """Plateaus at the critical exponents and slopes away from them (alpha = 4)."""
    base = cfg.with_updates(alpha=4.0, pathloss="unbounded")
    plateau_grid, slope_grid, super_grid = _scaling_grids(quick)
    problems: list[str] = []

    mrc_spread = _plateau_spread(SweepSpec(densities=plateau_grid, c=5e4, beta=2.0, base=base))
    if mrc_spread >= 0.1:
        problems.append(f"mrc beta=2 plateau varies {mrc_spread:.1%}")
    if not quick:
        sic_spread = _plateau_spread(SweepSpec(densities=plateau_grid, c=5e3, beta=1.0, receiver="zfsic", base=base))
        if sic_spread >= 0.1:
            problems.append(f"zfsic beta=1 plateau varies {sic_spread:.1%}")

    fixed = fit_asymptotic_exponent(run_sweep(SweepSpec(densities=slope_grid, c=4.0, beta=0.0, base=base)), window=(1.0, 100.0))
    if abs(fixed.slope + 2.0) > 0.15:
        problems.append(f"beta=0 slope {fixed.slope:.3f}")
    sub = fit_asymptotic_exponent(run_sweep(SweepSpec(densities=slope_grid, c=1.0, beta=1.0, base=base)))
    if not sub.slope < 0.0:
        problems.append(f"beta=1 slope {sub.slope:.3f} is not negative")

    linear = fit_asymptotic_exponent(
        run_sweep(SweepSpec(densities=super_grid, c=5e11, beta=3.0, base=base)),
        against="linear",
        window=(10**-3.5, 1e-3),
    )
    if linear.r_squared < 0.99:
        problems.append(f"beta=3 linear fit R^2 {linear.r_squared:.4f}")
    detail = "; ".join(problems) if problems else f"mrc plateau spread {mrc_spread:.1%}, beta=0 slope {fixed.slope:.3f}"
    return CheckResult("scaling", not problems, detail)


def check_correlation(cfg: NetworkConfig, quick: bool) -> CheckResult:
    """Correlated lower bound: unit-eigenvalue identity, monotonicity in rho, below Monte Carlo."""
    point = cfg.with_updates(density=1e-4, n_rx=4, pathloss="unbounded")
    exact = mrc_sum_se_exact(point).value
    unit = corr_sum_se_lower(point, [1.0] * 4).value
    problems: list[str] = []
    if abs(unit - exact) > 1e-6 * exact:
        problems.append(f"unit eigenvalues give {unit:.9g}, exact {exact:.9g}")
    previous = math.inf
    for index, rho in enumerate((0.3, 0.6, 0.9)):
        corr = CorrelationSpec.exponential(4, rho)
        bound = corr_sum_se_lower(point, correlation_eigenvalues(corr).tolist())
        if not bound.value < previous:
            problems.append(f"bound not decreasing at rho={rho:g}")
        previous = bound.value
        est = estimate_sum_se(point, Receiver.mrc(), corr, 5_000 if quick else 50_000, DEFAULT_SEED + index)
        if est.per_link_se < bound.per_link:
            problems.append(f"mc below bound at rho={rho:g}")
    detail = "; ".join(problems) if problems else "identity, monotonicity and ordering hold"
    return CheckResult("correlation", not problems, detail)


def check_bounded_pathloss(cfg: NetworkConfig, quick: bool) -> CheckResult:
    """Monte Carlo above the bounded-law lower bound; Campbell mean of interference."""
    base = cfg.with_updates(pathloss="bounded", n_rx=4).interference_limited()
    grid = np.geomspace(1e-4, 1e-2, 3 if quick else 10)
    problems: list[str] = []
    for index, lam in enumerate(grid):
        point = base.with_updates(density=float(lam))
        est = estimate_sum_se(point, Receiver.mrc(), None, 2_000 if quick else 20_000, DEFAULT_SEED + index)
        bound = bounded_pl_lower_bound(point)
        if not est.per_link_se > bound.per_link:
            problems.append(f"mc {est.per_link_se:.4g} <= bound {bound.per_link:.4g} at lam={lam:g}")
    point = base.with_updates(density=1e-3)
    mean = estimate_mean_interference(point, 5_000 if quick else 50_000, DEFAULT_SEED)
    target = bounded_pl_mean_interference(point.density, point.alpha)
    if abs(mean.mean - target) > 3.0 * mean.stderr:
        problems.append(f"mean interference {mean.mean:.5g} vs {target:.5g}")
    detail = "; ".join(problems) if problems else f"{len(grid)} grid points above the bound"
    return CheckResult("bounded_pathloss", not problems, detail)


def check_special_functions(cfg: NetworkConfig, quick: bool) -> CheckResult:
    """Special functions against independent evaluation routes."""
    problems: list[str] = []

    def compare(name: str, got: float, want: float, tol: float) -> None:
        if abs(got - want) > tol * abs(want):
            problems.append(f"{name}: {got!r} vs {want!r}")

    for alpha in (3.0, 4.0, 5.0):
        for v in np.geomspace(1e-3, 1e3, 8):
            compare(f"2F1 alpha={alpha:g} v={v:.3g}", hyp2f1_family(alpha, float(v)), hyp2f1_family_integral(alpha, float(v)), 1e-10)
    for z in np.linspace(0.5, 20.0, 20):
        want, _ = integrate.quad(lambda t: math.sin(t) / t if t else 1.0, 0.0, float(z), epsabs=0.0, epsrel=1e-13)
        compare(f"Si({z:.3g})", sine_integral(float(z)), want, 1e-10)
    for n in range(1, 25):
        compare(f"psi({n})", digamma(float(n)), harmonic_digamma(n), 1e-10)
    for order in (1, 2, 5):
        for x in (0.5, 2.0, 10.0, 50.0):
            want, _ = integrate.quad(
                lambda t, x, n: math.exp(x * (math.cos(t) - 1.0)) * math.cos(n * t),
                0.0,
                math.pi,
                args=(x, order),
                epsabs=0.0,
                epsrel=1e-13,
            )
            compare(f"I_{order}({x:g})", bessel_i(order, x, scaled=True), want / math.pi, 1e-8)
    detail = "; ".join(problems[:5]) if problems else "all comparisons within tolerance"
    return CheckResult("special_functions", not problems, detail)


def check_gamma_ratio_bounds(cfg: NetworkConfig, quick: bool) -> CheckResult:
    """Gamma-ratio inequalities behind the ZF-SIC bounds for L = 3..64."""
    violations = 0
    for alpha in (3.0, 4.0, 5.0):
        half = alpha / 2.0
        for cancel in range(3, 65):
            # Gamma(L) / Gamma(1 - alpha/2 + L) >= (L - alpha/2)**(alpha/2 - 1)
            if 1.0 / gamma_ratio(cancel, 1.0 - half) < (cancel - half) ** (half - 1.0):
                violations += 1
            # x**s <= Gamma(x + s) / Gamma(x) <= (x + s)**s with x = L, s = alpha/2
            ratio = math.exp(float(special.gammaln(cancel + half) - special.gammaln(cancel)))
            if not cancel**half <= ratio <= (cancel + half) ** half:
                violations += 1
    return CheckResult("gamma_ratio_bounds", violations == 0, f"{violations} violations")


CHECKS: tuple[Callable[[NetworkConfig, bool], CheckResult], ...] = (
    check_siso_constant,
    check_mrc_agreement,
    check_sic_agreement,
    check_bound_sandwich,
    check_negative_moment,
    check_scaling,
    check_correlation,
    check_bounded_pathloss,
    check_special_functions,
    check_gamma_ratio_bounds,
)


def run_validation(cfg: NetworkConfig, *, quick: bool = False) -> list[CheckResult]:
    """Run every check against ``cfg``.

    Args:
        cfg: Scenario; checks override density, N_r and path loss where their
            grids require it.
        quick: Smaller grids and realization counts.

    Returns:
        One result per check, in battery order.
    """
    results = []
    for check in CHECKS:
        try:
            result = check(cfg, quick)
        except RxScalingError as exc:
            result = CheckResult(check.__name__.removeprefix("check_"), False, f"error: {exc}")
        logger.info("validate: %s %s", result.name, "pass" if result.passed else "FAIL")
        results.append(result)
    return results
