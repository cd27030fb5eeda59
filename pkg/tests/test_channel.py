"""Tests for fading vectors, correlation and receiver gain reduction."""

from __future__ import annotations

import numpy as np
import pytest

from rxscaling import AntennaBudgetError, CorrelationSpec, InvalidParameterError, realization_stream
from rxscaling.channel import (
    correlation_eigenvalues,
    correlation_matrix,
    correlation_sqrt,
    draw_vectors,
    sample_mrc_gains,
    sample_zfsic_gains,
)


class TestCorrelation:
    """Tests for the correlation helpers."""

    def test_exponential_matrix(self) -> None:
        """C[i, j] = rho^|i - j|."""
        c = correlation_matrix(CorrelationSpec.exponential(4, 0.5))
        assert c[0, 0] == 1.0
        assert c[0, 3] == pytest.approx(0.125)
        np.testing.assert_allclose(c, c.T)

    def test_eigenvalues_sum_to_trace(self) -> None:
        """Exponential-model eigenvalues are positive, descending and sum to N_r."""
        eig = correlation_eigenvalues(CorrelationSpec.exponential(6, 0.9))
        assert eig.sum() == pytest.approx(6.0)
        assert bool(np.all(np.diff(eig) <= 0.0))
        assert bool(np.all(eig > 0.0))

    def test_identity_has_unit_eigenvalues(self) -> None:
        """No correlation gives N_r unit eigenvalues."""
        np.testing.assert_allclose(correlation_eigenvalues(CorrelationSpec.none(3)), np.ones(3))

    def test_sqrt_squares_to_matrix(self) -> None:
        """C^(1/2) C^(1/2) = C and the cached root is read-only."""
        corr = CorrelationSpec.exponential(4, 0.6)
        root = correlation_sqrt(corr)
        np.testing.assert_allclose(root @ root, correlation_matrix(corr), atol=1e-12)
        assert not root.flags.writeable

    def test_explicit_rank_deficient(self) -> None:
        """Explicit eigenvalues keep only the positive ones."""
        corr = CorrelationSpec.explicit([2.0, 1.0, 0.0], n_rx=4)
        np.testing.assert_allclose(correlation_eigenvalues(corr), [2.0, 1.0])


class TestMrcGains:
    """Tests for sample_mrc_gains."""

    def test_gain_laws(self) -> None:
        """Direct gain has mean N_r; interference gains have mean 1 and variance 1."""
        corr = CorrelationSpec.none(4)
        direct = []
        interference = []
        for i in range(4000):
            gains = sample_mrc_gains(5, corr, realization_stream(11, i))
            direct.append(gains.direct_gain)
            interference.extend(gains.interference_gains)
        direct_arr = np.array(direct)
        inter_arr = np.array(interference)
        assert direct_arr.mean() == pytest.approx(4.0, abs=4.0 * 2.0 / np.sqrt(direct_arr.size))
        assert inter_arr.mean() == pytest.approx(1.0, abs=4.0 / np.sqrt(inter_arr.size))
        assert inter_arr.var() == pytest.approx(1.0, abs=0.06)

    def test_empty_field(self, rng: np.random.Generator) -> None:
        """K = 0 gives no interference gains."""
        gains = sample_mrc_gains(0, CorrelationSpec.none(2), rng)
        assert gains.interference_gains.shape == (0,)
        assert gains.direct_gain > 0.0

    def test_negative_field_size(self, rng: np.random.Generator) -> None:
        """A negative field size is rejected."""
        with pytest.raises(InvalidParameterError):
            sample_mrc_gains(-1, CorrelationSpec.none(2), rng)

    def test_correlated_direct_gain_mean(self) -> None:
        """With correlation the direct gain still has mean tr(C) = N_r."""
        corr = CorrelationSpec.exponential(4, 0.9)
        direct = np.array([sample_mrc_gains(0, corr, realization_stream(12, i)).direct_gain for i in range(8000)])
        assert direct.mean() == pytest.approx(4.0, abs=4.0 * direct.std() / np.sqrt(direct.size))

    def test_correlated_direct_gain_variance(self, rng: np.random.Generator) -> None:
        """||h||**2 is a sum of mu_n-weighted Exp(1) terms, so its variance is sum mu_n**2."""
        corr = CorrelationSpec.exponential(4, 0.9)
        eig = correlation_eigenvalues(corr)
        direct = np.array([sample_mrc_gains(0, corr, rng).direct_gain for _ in range(20000)])
        centred = direct - direct.mean()
        variance = float(np.mean(centred**2))
        spread = float(np.sqrt((np.mean(centred**4) - variance**2) / direct.size))
        assert variance == pytest.approx(float(np.sum(eig**2)), abs=4.0 * spread)

    @pytest.mark.parametrize("x", (1.0, 2.0, 4.0, 8.0))
    def test_correlated_interference_tail(self, rng: np.random.Generator, x: float) -> None:
        """P[g > x] <= exp(-x / mu_1) for a correlated interference gain."""
        corr = CorrelationSpec.exponential(4, 0.9)
        mu_max = float(correlation_eigenvalues(corr)[0])
        gains = np.array([sample_mrc_gains(1, corr, rng).interference_gains[0] for _ in range(20000)])
        bound = np.exp(-x / mu_max)
        tail = float(np.mean(gains > x))
        assert tail <= bound + 4.0 * np.sqrt(bound * (1.0 - bound) / gains.size)

    def test_unitary_invariance(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Rotating every vector by one unitary leaves MRC and ZF-SIC gains unchanged."""
        raw = np.random.default_rng(7).standard_normal((4, 4, 2))
        unitary, _ = np.linalg.qr(raw[..., 0] + 1j * raw[..., 1])
        corr = CorrelationSpec.none(4)
        distances = np.arange(1.0, 7.0)
        plain_mrc = [sample_mrc_gains(6, corr, realization_stream(15, i)) for i in range(10)]
        plain_zf = [sample_zfsic_gains(distances, corr, 2, realization_stream(15, i)) for i in range(10)]

        def rotated(count: int, spec: CorrelationSpec, rng: np.random.Generator) -> np.ndarray:
            return draw_vectors(count, spec, rng) @ unitary

        monkeypatch.setattr("rxscaling.channel.draw_vectors", rotated)
        for i in range(10):
            mrc = sample_mrc_gains(6, corr, realization_stream(15, i))
            zf = sample_zfsic_gains(distances, corr, 2, realization_stream(15, i))
            assert mrc.direct_gain == pytest.approx(plain_mrc[i].direct_gain, rel=1e-12)
            np.testing.assert_allclose(mrc.interference_gains, plain_mrc[i].interference_gains, rtol=1e-9, atol=1e-13)
            assert zf.direct_gain == pytest.approx(plain_zf[i].direct_gain, rel=1e-12)
            np.testing.assert_allclose(zf.interference_gains, plain_zf[i].interference_gains, rtol=1e-9, atol=1e-13)


class TestZfSicGains:
    """Tests for sample_zfsic_gains."""

    def test_zero_cancellation_matches_mrc(self) -> None:
        """ZF-SIC(0) returns exactly the MRC gains from the same stream."""
        distances = np.array([0.5, 3.0, 10.0, 20.0])
        corr = CorrelationSpec.none(4)
        for i in range(20):
            mrc = sample_mrc_gains(distances.size, corr, realization_stream(13, i))
            zf = sample_zfsic_gains(distances, corr, 0, realization_stream(13, i))
            assert zf.direct_gain == mrc.direct_gain
            np.testing.assert_array_equal(zf.interference_gains, mrc.interference_gains)
            assert zf.cancelled == 0

    def test_direct_gain_is_direct_norm(self) -> None:
        """|R[0, 0]|**2 equals ||h_direct||**2 from the same stream."""
        distances = np.arange(1.0, 6.0)
        corr = CorrelationSpec.none(5)
        for i in range(20):
            mrc = sample_mrc_gains(distances.size, corr, realization_stream(16, i))
            zf = sample_zfsic_gains(distances, corr, 3, realization_stream(16, i))
            assert zf.direct_gain == pytest.approx(mrc.direct_gain, rel=1e-12)

    def test_residual_alignment(self) -> None:
        """Residual gains are the MRC gains of distances[L:] from the same stream."""
        distances = np.linspace(1.0, 10.0, 7)
        corr = CorrelationSpec.none(4)
        for i in range(20):
            zf = sample_zfsic_gains(distances, corr, 3, realization_stream(17, i))
            mrc = sample_mrc_gains(distances.size, corr, realization_stream(17, i))
            assert zf.cancelled == 3
            assert zf.interference_gains.shape == (4,)
            np.testing.assert_allclose(zf.interference_gains, mrc.interference_gains[3:], rtol=1e-10, atol=1e-14)

    def test_fewer_interferers_than_budget(self, rng: np.random.Generator) -> None:
        """With K < L every interferer is cancelled."""
        zf = sample_zfsic_gains(np.array([2.0]), CorrelationSpec.none(4), 3, rng)
        assert zf.cancelled == 1
        assert zf.interference_gains.size == 0

    def test_gain_laws(self) -> None:
        """Direct gain ~ Gamma(N_r, 1) after cancellation; residual gains ~ Exp(1)."""
        distances = np.arange(1.0, 9.0)
        corr = CorrelationSpec.none(6)
        direct = []
        residual = []
        for i in range(4000):
            zf = sample_zfsic_gains(distances, corr, 2, realization_stream(14, i))
            direct.append(zf.direct_gain)
            residual.extend(zf.interference_gains)
        direct_arr = np.array(direct)
        residual_arr = np.array(residual)
        assert direct_arr.mean() == pytest.approx(6.0, abs=4.0 * np.sqrt(6.0) / np.sqrt(direct_arr.size))
        assert residual_arr.mean() == pytest.approx(1.0, abs=4.0 / np.sqrt(residual_arr.size))

    def test_budget_enforced(self, rng: np.random.Generator) -> None:
        """L >= N_r raises AntennaBudgetError."""
        with pytest.raises(AntennaBudgetError):
            sample_zfsic_gains(np.array([1.0, 2.0]), CorrelationSpec.none(2), 2, rng)

    def test_correlation_rejected(self, rng: np.random.Generator) -> None:
        """ZF-SIC with correlated fading is rejected."""
        with pytest.raises(InvalidParameterError):
            sample_zfsic_gains(np.array([1.0]), CorrelationSpec.exponential(2, 0.5), 1, rng)
