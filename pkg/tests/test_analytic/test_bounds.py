"""Tests for the closed-form bounds."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate, special

from rxscaling import CorrelationSpec, InvalidParameterError, NetworkConfig
from rxscaling.analytic import (
    bounded_pl_lower_bound,
    corr_scaling_lower_bound,
    log_ratio_bounds,
    mrc_lower_bound,
    mrc_sum_se_exact,
    mrc_upper_bound,
    sic_lower_bound,
    sic_sum_se_exact,
    sic_upper_bound,
)
from rxscaling.channel import correlation_eigenvalues


def _sir(density: float, n_rx: int, **updates: object) -> NetworkConfig:
    return NetworkConfig(density=density, n_rx=n_rx, noise_power_mw=0.0, **updates)  # type: ignore[arg-type]


class TestLogRatioBounds:
    """Tests for log_ratio_bounds."""

    @pytest.mark.parametrize("n_rx", (1, 4, 16))
    def test_brackets_gamma_over_constant(self, n_rx: int) -> None:
        """lower <= E[log2(1 + X)] <= upper for X ~ Gamma(N_r, 1)."""
        want, _ = integrate.quad(
            lambda x: math.log2(1.0 + x) * math.exp((n_rx - 1) * math.log(x) - x - math.lgamma(n_rx)) if x > 0 else 0.0,
            0.0,
            math.inf,
        )
        lower, upper = log_ratio_bounds(float(special.digamma(n_rx)), 1.0, float(n_rx), 1.0)
        assert lower <= want <= upper

    def test_zero_denominator_mean(self) -> None:
        """E[Y] = 0 makes the lower bound infinite."""
        lower, _ = log_ratio_bounds(0.0, 0.0, 1.0, 1.0)
        assert lower == math.inf


class TestMrcBounds:
    """Tests for the MRC bounds."""

    @given(
        log_lam=st.floats(min_value=-6.0, max_value=-2.0),
        n_rx=st.integers(min_value=2, max_value=64),
        alpha=st.floats(min_value=2.5, max_value=6.0),
    )
    def test_lower_below_upper(self, log_lam: float, n_rx: int, alpha: float) -> None:
        """The lower bound never exceeds the upper bound."""
        cfg = _sir(10.0**log_lam, n_rx, alpha=alpha)
        assert 0.0 < mrc_lower_bound(cfg).value <= mrc_upper_bound(cfg).value

    def test_single_antenna_lower_is_zero(self) -> None:
        """N_r = 1 gives a zero lower bound."""
        assert mrc_lower_bound(_sir(1e-4, 1)).value == 0.0

    def test_requires_interference_limited(self) -> None:
        """Bounds reject sigma^2 > 0."""
        with pytest.raises(InvalidParameterError):
            mrc_lower_bound(NetworkConfig())
        with pytest.raises(InvalidParameterError):
            mrc_upper_bound(NetworkConfig())

    def test_requires_unbounded_law(self) -> None:
        """The MRC bounds assume x**-alpha."""
        with pytest.raises(InvalidParameterError):
            mrc_lower_bound(_sir(1e-4, 4, pathloss="bounded"))

    def test_bound_metadata(self) -> None:
        """Results carry method, expression and density."""
        bound = mrc_upper_bound(_sir(1e-4, 4))
        assert bound.method == "upper_bound"
        assert bound.expression == "mrc_upper"
        assert bound.per_link == pytest.approx(bound.value / 1e-4)


class TestSicBounds:
    """Tests for the ZF-SIC bounds."""

    def test_lower_needs_enough_cancellation(self) -> None:
        """L <= alpha/2 is rejected."""
        with pytest.raises(InvalidParameterError):
            sic_lower_bound(_sir(1e-4, 3))

    def test_lower_cannot_exceed_budget(self) -> None:
        """L > N_r - 1 is rejected."""
        with pytest.raises(InvalidParameterError):
            sic_lower_bound(_sir(1e-4, 4), 4)

    def test_lower_grows_with_antennas(self) -> None:
        """More antennas, more cancellation, higher bound."""
        values = [sic_lower_bound(_sir(1e-4, n)).value for n in (4, 8, 16, 32)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_upper_needs_two_antennas(self) -> None:
        """N_r = 1 is rejected."""
        with pytest.raises(InvalidParameterError):
            sic_upper_bound(_sir(1e-4, 1))

    @given(
        log_lam=st.floats(min_value=-6.0, max_value=-2.0),
        n_rx=st.integers(min_value=4, max_value=128),
    )
    def test_lower_below_upper(self, log_lam: float, n_rx: int) -> None:
        """The ZF-SIC lower bound never exceeds its upper bound."""
        cfg = _sir(10.0**log_lam, n_rx)
        assert sic_lower_bound(cfg).value <= sic_upper_bound(cfg).value


class TestBoundedAndCorrelated:
    """Tests for the bounded-law and correlated bounds."""

    def test_bounded_law_required(self) -> None:
        """The bounded-law bound rejects x**-alpha."""
        with pytest.raises(InvalidParameterError):
            bounded_pl_lower_bound(_sir(1e-4, 4))

    def test_bounded_variants(self) -> None:
        """Both distance factors give positive, distinct values."""
        cfg = _sir(1e-3, 4, pathloss="bounded")
        annulus = bounded_pl_lower_bound(cfg)
        printed = bounded_pl_lower_bound(cfg, "as_printed")
        assert annulus.value > 0.0
        assert printed.value > 0.0
        assert annulus.value != printed.value
        assert printed.expression == "bounded_pl_lower_as_printed"

    def test_bounded_single_antenna(self) -> None:
        """N_r = 1 gives zero."""
        assert bounded_pl_lower_bound(_sir(1e-3, 1, pathloss="bounded")).value == 0.0

    def test_correlated_bound_falls_with_rho(self) -> None:
        """Stronger correlation lowers the closed-form bound."""
        cfg = _sir(1e-4, 8)
        values = [
            corr_scaling_lower_bound(cfg, correlation_eigenvalues(CorrelationSpec.exponential(8, rho)).tolist()).value
            for rho in (0.0, 0.3, 0.6, 0.9)
        ]
        assert all(b < a for a, b in zip(values, values[1:]))


@pytest.mark.slow
class TestSandwich:
    """lower <= exact <= upper with sigma^2 = 0."""

    @pytest.mark.parametrize("density", (1e-4, 1e-3))
    @pytest.mark.parametrize("n_rx", (4, 8))
    def test_mrc(self, density: float, n_rx: int) -> None:
        """MRC exact lies between its bounds."""
        cfg = _sir(density, n_rx)
        exact = mrc_sum_se_exact(cfg)
        assert mrc_lower_bound(cfg).value <= exact.value + exact.abs_error_estimate
        assert exact.value - exact.abs_error_estimate <= mrc_upper_bound(cfg).value

    @pytest.mark.parametrize("density", (1e-4, 1e-3))
    @pytest.mark.parametrize("n_rx", (4, 8))
    def test_zfsic(self, density: float, n_rx: int) -> None:
        """ZF-SIC(N_r - 1) exact lies between its bounds."""
        cfg = _sir(density, n_rx)
        exact = sic_sum_se_exact(cfg, n_rx - 1)
        assert sic_lower_bound(cfg).value <= exact.value + exact.abs_error_estimate
        assert exact.value - exact.abs_error_estimate <= sic_upper_bound(cfg).value
