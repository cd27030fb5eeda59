"""Tests for the Monte Carlo estimators."""

from __future__ import annotations

import logging
import math

import pytest

from rxscaling import (
    AntennaBudgetError,
    CorrelationSpec,
    InvalidParameterError,
    NetworkConfig,
    Receiver,
    estimate_itlinq_probability,
    estimate_negative_moment,
    estimate_sum_se,
    realization_stream,
    sinr_sample,
)
from rxscaling.analytic import (
    bounded_pl_mean_interference,
    mrc_sum_se_exact,
    sic_interference_mean_campbell,
    sic_sum_se_exact,
)
from rxscaling.simulator import (
    estimate_mean_interference,
    estimate_sic_interference_mean,
    window_tail_interference,
)


class TestSinrSample:
    """Tests for sinr_sample."""

    def test_positive_and_reproducible(self, reference_config: NetworkConfig) -> None:
        """SINR draws are positive and depend only on the stream."""
        a = sinr_sample(reference_config, Receiver.mrc(), None, realization_stream(5, 0))
        b = sinr_sample(reference_config, Receiver.mrc(), None, realization_stream(5, 0))
        assert a > 0.0
        assert a == b

    def test_infinite_without_noise_or_interference(self) -> None:
        """No noise and no interferers give the +inf sentinel."""
        cfg = NetworkConfig(density=0.0, noise_power_mw=0.0)
        assert sinr_sample(cfg, Receiver.mrc(), None, realization_stream(1, 0)) == math.inf

    def test_cancelling_everything_leaves_noise(self) -> None:
        """ZF-SIC cancelling the whole field leaves a finite SNR."""
        cfg = NetworkConfig(density=1e-8, n_rx=8)
        value = sinr_sample(cfg, Receiver.zfsic(7), None, realization_stream(2, 0))
        assert math.isfinite(value)

    def test_correlated_zfsic_rejected(self, reference_config: NetworkConfig) -> None:
        """ZF-SIC with correlation is an invalid combination."""
        with pytest.raises(InvalidParameterError):
            sinr_sample(reference_config, Receiver.zfsic(1), CorrelationSpec.exponential(4, 0.5), realization_stream(1, 0))

    def test_correlation_size_must_match(self, reference_config: NetworkConfig) -> None:
        """The correlation spec must describe N_r antennas."""
        with pytest.raises(InvalidParameterError):
            sinr_sample(reference_config, Receiver.mrc(), CorrelationSpec.none(2), realization_stream(1, 0))


class TestEstimateSumSe:
    """Tests for estimate_sum_se."""

    def test_sum_is_density_times_per_link(self, reference_config: NetworkConfig) -> None:
        """sum SE = lambda x per-link SE, stderr scaled alike."""
        est = estimate_sum_se(reference_config, n_realizations=300, seed=1)
        assert est.sum_se == reference_config.density * est.per_link_se
        assert est.sum_stderr == pytest.approx(reference_config.density * est.stderr)
        assert est.receiver == Receiver.mrc()

    def test_same_seed_same_result(self, reference_config: NetworkConfig) -> None:
        """Runs are deterministic in the seed."""
        a = estimate_sum_se(reference_config, n_realizations=300, seed=9)
        b = estimate_sum_se(reference_config, n_realizations=300, seed=9)
        c = estimate_sum_se(reference_config, n_realizations=300, seed=10)
        assert a.per_link_se == b.per_link_se
        assert a.per_link_se != c.per_link_se

    def test_worker_count_does_not_change_result(self, reference_config: NetworkConfig) -> None:
        """Threads share the realizations without changing the estimate."""
        serial = estimate_sum_se(reference_config, n_realizations=2500, seed=3)
        threaded = estimate_sum_se(reference_config, n_realizations=2500, seed=3, workers=3)
        assert serial.per_link_se == threaded.per_link_se
        assert serial.stderr == threaded.stderr

    def test_zfsic_zero_equals_mrc_bitwise(self, reference_config: NetworkConfig) -> None:
        """ZF-SIC(0) and MRC agree bit for bit under a shared seed."""
        mrc = estimate_sum_se(reference_config, Receiver.mrc(), n_realizations=500, seed=4)
        zf0 = estimate_sum_se(reference_config, Receiver.zfsic(0), n_realizations=500, seed=4)
        assert mrc.per_link_se == zf0.per_link_se
        assert mrc.stderr == zf0.stderr

    def test_more_antennas_help(self, reference_config: NetworkConfig) -> None:
        """Common random numbers: N_r = 8 beats N_r = 2."""
        low = estimate_sum_se(reference_config.with_updates(n_rx=2), n_realizations=2000, seed=6)
        high = estimate_sum_se(reference_config.with_updates(n_rx=8), n_realizations=2000, seed=6)
        assert high.per_link_se > low.per_link_se

    def test_cancellation_helps(self, reference_config: NetworkConfig) -> None:
        """ZF-SIC(3) beats MRC at N_r = 4."""
        mrc = estimate_sum_se(reference_config, Receiver.mrc(), n_realizations=2000, seed=7)
        zf = estimate_sum_se(reference_config, Receiver.zfsic(3), n_realizations=2000, seed=7)
        assert zf.per_link_se > mrc.per_link_se

    def test_realization_floor(self, reference_config: NetworkConfig) -> None:
        """Fewer than 100 realizations are rejected."""
        with pytest.raises(InvalidParameterError):
            estimate_sum_se(reference_config, n_realizations=0)

    def test_budget_checked(self, reference_config: NetworkConfig) -> None:
        """ZF-SIC(4) with four antennas is rejected."""
        with pytest.raises(AntennaBudgetError):
            estimate_sum_se(reference_config, Receiver.zfsic(4), n_realizations=100)

    def test_infinite_sinr_counted_and_flagged(self, caplog: pytest.LogCaptureFixture, diagnostics: None) -> None:
        """Empty noiseless fields use the window-tail proxy and flag the run."""
        cfg = NetworkConfig(density=1e-6, noise_power_mw=0.0)
        with caplog.at_level(logging.WARNING, logger="rxscaling"):
            est = estimate_sum_se(cfg, n_realizations=400, seed=8)
        assert est.infinite_sinr_count > 0
        assert est.flagged
        assert math.isfinite(est.per_link_se)
        assert est.window_tail_interference == pytest.approx(window_tail_interference(cfg))
        assert "no residual interference" in caplog.text

    def test_stratified_flag(self, reference_config: NetworkConfig) -> None:
        """Stratified runs are marked as such."""
        est = estimate_sum_se(reference_config, n_realizations=200, seed=2, stratify=True)
        assert est.stratified

    def test_stderr_shrinks_with_root_n(self, reference_config: NetworkConfig) -> None:
        """Four times the realizations halve the standard error."""
        small = estimate_sum_se(reference_config, n_realizations=1000, seed=15)
        large = estimate_sum_se(reference_config, n_realizations=4000, seed=15)
        assert 0.45 <= large.stderr / small.stderr <= 0.55

    def test_bounded_law_never_adds_interference(self, reference_config: NetworkConfig) -> None:
        """On the same draw the bounded law gives at least the unbounded SINR."""
        unbounded = reference_config.with_updates(density=1e-3)
        bounded = unbounded.with_updates(pathloss="bounded")
        for i in range(200):
            low = sinr_sample(unbounded, Receiver.mrc(), None, realization_stream(16, i))
            high = sinr_sample(bounded, Receiver.mrc(), None, realization_stream(16, i))
            assert high >= low
        near = NetworkConfig(density=1e-2, comm_range=10.0)
        assert (
            estimate_mean_interference(near.with_updates(pathloss="bounded"), 500, seed=17).mean
            <= estimate_mean_interference(near, 500, seed=17).mean
        )

    @pytest.mark.slow
    def test_mrc_matches_exact(self, wide_window_config: NetworkConfig) -> None:
        """MRC Monte Carlo lies within 3.5 sigma of the exact integral."""
        est = estimate_sum_se(wide_window_config, n_realizations=20_000, seed=2016)
        exact = mrc_sum_se_exact(wide_window_config).per_link
        assert abs(est.per_link_se - exact) <= 3.5 * est.stderr
        assert abs(est.per_link_se - exact) <= 0.03 * exact

    @pytest.mark.slow
    def test_zfsic_matches_exact(self, wide_window_config: NetworkConfig) -> None:
        """ZF-SIC(3) Monte Carlo lies within 3.5 sigma of the exact integral."""
        est = estimate_sum_se(wide_window_config, Receiver.zfsic(3), n_realizations=20_000, seed=2017)
        exact = sic_sum_se_exact(wide_window_config, 3).per_link
        assert abs(est.per_link_se - exact) <= 3.5 * est.stderr
        assert abs(est.per_link_se - exact) <= 0.03 * exact


class TestNegativeMoment:
    """Tests for estimate_negative_moment."""

    def test_matches_closed_form(self) -> None:
        """E[1/I] within 5% of Gamma(1 + alpha/2) sinc(2/alpha)^(alpha/2) / (lam pi)^(alpha/2)."""
        cfg = NetworkConfig(density=1e-4, alpha=4.0)
        est = estimate_negative_moment(cfg, 20_000, seed=11)
        assert abs(est.relative_error) < 0.05
        assert est.n_used + round(est.empty_fraction * 20_000) == 20_000

    def test_window_enlarged_for_heavy_tail(self) -> None:
        """For alpha = 3 the window holds at least 4e4 expected points."""
        cfg = NetworkConfig(density=1e-4, alpha=3.0)
        est = estimate_negative_moment(cfg, 10, seed=1)
        assert cfg.density * math.pi * est.window_radius**2 >= 4e4 * (1.0 - 1e-9)

    def test_requires_unbounded_law(self) -> None:
        """The bounded law has no closed-form negative moment here."""
        with pytest.raises(InvalidParameterError):
            estimate_negative_moment(NetworkConfig(pathloss="bounded"), 10)

    def test_requires_positive_density(self) -> None:
        """lambda = 0 is rejected."""
        with pytest.raises(InvalidParameterError):
            estimate_negative_moment(NetworkConfig(density=0.0), 10)

    def test_requires_realizations(self) -> None:
        """n = 0 is rejected."""
        with pytest.raises(InvalidParameterError):
            estimate_negative_moment(NetworkConfig(density=1e-4), 0)


class TestItlinqProbability:
    """Tests for estimate_itlinq_probability."""

    def test_matches_closed_form(self, reference_config: NetworkConfig) -> None:
        """The empirical probability is within 4 sigma of the closed form."""
        cfg = reference_config.with_updates(density=1e-4)
        est = estimate_itlinq_probability(cfg, 2.0, 10_000, seed=12)
        assert 0.2 < est.analytic < 0.9
        assert abs(est.probability - est.analytic) <= 4.0 * est.stderr

    def test_requires_noise(self) -> None:
        """An interference-limited config is rejected."""
        with pytest.raises(InvalidParameterError):
            estimate_itlinq_probability(NetworkConfig(noise_power_mw=0.0), 1.0, 10)

    @pytest.mark.parametrize(("d", "n"), [(0.0, 10), (-1.0, 10), (1.0, 0)])
    def test_rejects_bad_arguments(self, reference_config: NetworkConfig, d: float, n: int) -> None:
        """d <= 0 and n = 0 are rejected."""
        with pytest.raises(InvalidParameterError):
            estimate_itlinq_probability(reference_config, d, n)


class TestInterferenceMeans:
    """Tests for the Campbell mean estimators."""

    def test_bounded_law_mean(self) -> None:
        """Mean interference under min(1, x^-alpha) matches 2 pi lam (1/2 + 1/(alpha - 2))."""
        cfg = NetworkConfig(density=1e-3, pathloss="bounded")
        est = estimate_mean_interference(cfg, 20_000, seed=13)
        target = bounded_pl_mean_interference(cfg.density, cfg.alpha)
        assert abs(est.mean - target) <= 4.0 * est.stderr

    def test_residual_mean_after_cancellation(self) -> None:
        """Interference beyond the L nearest matches the Campbell mean."""
        cfg = NetworkConfig(density=1e-4, sim_radius=2000.0)
        est = estimate_sic_interference_mean(cfg, 4, 5_000, seed=14)
        target = sic_interference_mean_campbell(cfg.density, cfg.alpha, 4)
        assert abs(est.mean - target) <= 4.0 * est.stderr + 0.01 * target

    def test_cancel_must_be_positive(self) -> None:
        """L = 0 is rejected."""
        with pytest.raises(InvalidParameterError):
            estimate_sic_interference_mean(NetworkConfig(), 0, 10)

    def test_requires_realizations(self) -> None:
        """Both mean estimators reject n = 0."""
        with pytest.raises(InvalidParameterError):
            estimate_mean_interference(NetworkConfig(), 0)
        with pytest.raises(InvalidParameterError):
            estimate_sic_interference_mean(NetworkConfig(), 2, 0)
