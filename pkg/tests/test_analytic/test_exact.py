"""Tests for the exact integral expressions."""

from __future__ import annotations

import math

import pytest
from scipy import integrate

from rxscaling import AntennaBudgetError, CorrelationSpec, InvalidParameterError, NetworkConfig
from rxscaling.analytic import (
    corr_sum_se_lower,
    mrc_closed_form_siso,
    mrc_sum_se_exact,
    mrc_sum_se_fixed_distance,
    sic_sum_se_bessel_lower,
    sic_sum_se_exact,
)
from rxscaling.channel import correlation_eigenvalues


class TestMrcExact:
    """Tests for the MRC integrals."""

    def test_siso_average_matches_closed_form(self) -> None:
        """N_r = 1, alpha = 4, no noise: the closed form averaged over d."""
        cfg = NetworkConfig(density=1e-4, n_rx=1, noise_power_mw=0.0)
        r_d = cfg.comm_range
        want, _ = integrate.quad(
            lambda r: mrc_closed_form_siso(cfg.density, r) * 2.0 * r / (r_d * r_d - 1.0),
            1.0,
            r_d,
            epsrel=1e-11,
        )
        assert mrc_sum_se_exact(cfg).per_link == pytest.approx(want, rel=1e-6)

    def test_between_fixed_distance_extremes(self, reference_config: NetworkConfig) -> None:
        """The average lies between the rates at d = R_d and d = 1."""
        far = mrc_sum_se_fixed_distance(reference_config, reference_config.comm_range).value
        near = mrc_sum_se_fixed_distance(reference_config, 1.0).value
        exact = mrc_sum_se_exact(reference_config)
        assert far < exact.value < near
        assert exact.abs_error_estimate >= 0.0
        assert exact.expression == "mrc_exact"
        assert exact.method == "exact_integral"

    def test_more_antennas_help(self, sir_config: NetworkConfig) -> None:
        """N_r = 8 beats N_r = 2."""
        low = mrc_sum_se_exact(sir_config.with_updates(n_rx=2)).value
        high = mrc_sum_se_exact(sir_config.with_updates(n_rx=8)).value
        assert high > low

    def test_noise_hurts(self, reference_config: NetworkConfig) -> None:
        """Removing the noise raises the rate."""
        noisy = mrc_sum_se_exact(reference_config).value
        clean = mrc_sum_se_exact(reference_config.interference_limited()).value
        assert clean > noisy

    def test_bounded_law_rejected(self) -> None:
        """The exact integrals assume x**-alpha."""
        with pytest.raises(InvalidParameterError):
            mrc_sum_se_exact(NetworkConfig(pathloss="bounded"))

    def test_zero_density_rejected(self) -> None:
        """lambda = 0 has no interference-limited integral."""
        with pytest.raises(InvalidParameterError):
            mrc_sum_se_exact(NetworkConfig(density=0.0))


class TestSicExact:
    """Tests for the ZF-SIC integrals."""

    def test_budget_enforced(self, sir_config: NetworkConfig) -> None:
        """L = N_r is rejected."""
        with pytest.raises(AntennaBudgetError):
            sic_sum_se_exact(sir_config, 4)

    def test_cancel_must_be_positive(self, sir_config: NetworkConfig) -> None:
        """L = 0 belongs to the MRC integral."""
        with pytest.raises(InvalidParameterError):
            sic_sum_se_exact(sir_config, 0)

    def test_bessel_bound_alpha_four_only(self, sir_config: NetworkConfig) -> None:
        """The Bessel form is stated for alpha = 4."""
        with pytest.raises(InvalidParameterError):
            sic_sum_se_bessel_lower(sir_config.with_updates(alpha=3.0), 2)

    @pytest.mark.slow
    def test_cancellation_beats_mrc(self, sir_config: NetworkConfig) -> None:
        """ZF-SIC(3) exceeds MRC at N_r = 4, and more cancellation helps."""
        mrc = mrc_sum_se_exact(sir_config).value
        one = sic_sum_se_exact(sir_config, 1).value
        three = sic_sum_se_exact(sir_config, 3).value
        assert mrc < one < three

    @pytest.mark.slow
    def test_bessel_bound_below_exact(self, sir_config: NetworkConfig) -> None:
        """The Bessel-form bound lies below the exact ZF-SIC value."""
        exact = sic_sum_se_exact(sir_config, 3)
        bound = sic_sum_se_bessel_lower(sir_config, 3)
        assert bound.value <= exact.value + exact.abs_error_estimate


class TestCorrelatedLower:
    """Tests for corr_sum_se_lower."""

    def test_rejects_non_positive_eigenvalues(self, sir_config: NetworkConfig) -> None:
        """Zero eigenvalues are rejected."""
        with pytest.raises(InvalidParameterError):
            corr_sum_se_lower(sir_config, [1.0, 0.0])

    @pytest.mark.slow
    def test_unit_eigenvalues_match_exact(self, sir_config: NetworkConfig) -> None:
        """Unit eigenvalues reproduce the uncorrelated exact value."""
        exact = mrc_sum_se_exact(sir_config).value
        assert corr_sum_se_lower(sir_config, [1.0] * 4).value == pytest.approx(exact, rel=1e-6)

    @pytest.mark.slow
    def test_decreasing_in_rho(self, sir_config: NetworkConfig) -> None:
        """Stronger correlation lowers the bound."""
        values = [
            corr_sum_se_lower(sir_config, correlation_eigenvalues(CorrelationSpec.exponential(4, rho)).tolist()).value
            for rho in (0.3, 0.6, 0.9)
        ]
        assert values[0] > values[1] > values[2]
        assert all(math.isfinite(v) for v in values)
