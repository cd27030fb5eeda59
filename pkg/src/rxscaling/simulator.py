"""Monte Carlo estimation at the typical receiver.

A realization is one link distance, one interferer field and one fading draw,
all taken from the stream of ``(seed, index)``. Per-realization results are
stored by index and reduced with numpy's pairwise summation, so an estimate
depends only on the seed and the realization count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy.typing import NDArray

from ._constants import (
    DEFAULT_BLOCK_SIZE,
    DEFAULT_REALIZATIONS,
    DEFAULT_SEED,
    EMPTY_FIELD_FLAG_FRACTION,
    INFINITE_SINR_FLAG_FRACTION,
    NEGATIVE_MOMENT_TAIL_TOLERANCE,
)
from ._exceptions import InvalidParameterError
from ._rng import realization_stream
from ._utils import _is_logging_enabled, logger, require, require_density
from .analytic.closed_form import interference_negative_moment, itlinq_probability
from .channel import sample_mrc_gains, sample_zfsic_gains
from .geometry import sample_interferer_distances, sample_interferer_field, sample_link_distance
from .types.channel import CorrelationSpec, Receiver
from .types.network import NetworkConfig
from .types.results import (
    MeanEstimate,
    NegativeMomentEstimate,
    ProbabilityEstimate,
    SeEstimate,
)

__all__ = [
    "sinr_sample",
    "estimate_sum_se",
    "estimate_negative_moment",
    "estimate_itlinq_probability",
    "estimate_mean_interference",
    "estimate_sic_interference_mean",
    "window_tail_interference",
]

MIN_REALIZATIONS = 100


def _require_realizations(n_realizations: int) -> None:
    require(
        n_realizations >= 1,
        f"need at least one realization, got {n_realizations}",
        parameter="n_realizations",
        value=n_realizations,
        condition="n >= 1",
    )


def _resolve_corr(cfg: NetworkConfig, receiver: Receiver, corr: CorrelationSpec | None) -> CorrelationSpec:
    corr = CorrelationSpec.none(cfg.n_rx) if corr is None else corr
    if corr.n_rx != cfg.n_rx:
        raise InvalidParameterError(
            f"correlation is for {corr.n_rx} antennas, network has {cfg.n_rx}",
            parameter="corr",
            value=corr.label,
            condition="corr.n_rx = N_r",
        )
    if receiver.kind == "zfsic":
        receiver.check_budget(cfg.n_rx)
        if not corr.is_identity:
            raise InvalidParameterError(
                "ZF-SIC is only defined for uncorrelated fading",
                parameter="corr",
                value=corr.label,
                condition="corr = none",
            )
    return corr


def _signal_and_interference(
    cfg: NetworkConfig,
    receiver: Receiver,
    corr: CorrelationSpec,
    rng: np.random.Generator,
    stratum: tuple[int, int] | None = None,
) -> tuple[float, float]:
    d = sample_link_distance(cfg, rng, stratum)
    field = sample_interferer_field(cfg, rng)
    if receiver.kind == "mrc":
        gains = sample_mrc_gains(field.count, corr, rng)
        distances = field.distances
    else:
        zf = sample_zfsic_gains(field.distances, corr, receiver.cancel, rng)
        gains = zf
        distances = field.distances[zf.cancelled :]
    signal = gains.direct_gain * d**-cfg.alpha
    interference = float(np.sum(gains.interference_gains * cfg.path_loss(distances)))
    return signal, interference


def sinr_sample(
    cfg: NetworkConfig,
    receiver: Receiver,
    corr: CorrelationSpec | None,
    rng: np.random.Generator,
) -> float:
    """Draw one SINR at the typical receiver.

    SINR = H d**-alpha / (sum of residual H_j l(d_j) + 1/SNR). Returns
    ``math.inf`` when there is neither noise nor residual interference.

    Args:
        cfg: Scenario.
        receiver: MRC or ZF-SIC(L).
        corr: Receive correlation (None for i.i.d.).
        rng: Caller-owned random stream.

    Raises:
        InvalidParameterError: For ZF-SIC with L >= N_r or with correlation.
    """
    corr = _resolve_corr(cfg, receiver, corr)
    signal, interference = _signal_and_interference(cfg, receiver, corr, rng)
    denominator = interference + cfg.inverse_snr
    if denominator == 0.0:
        return math.inf
    return signal / denominator


def window_tail_interference(cfg: NetworkConfig) -> float:
    """Mean interference from beyond the window, 2 pi lam R_sim**(2 - alpha) / (alpha - 2)."""
    return 2.0 * math.pi * cfg.density * cfg.radius ** (2.0 - cfg.alpha) / (cfg.alpha - 2.0)


def _run_blocks(
    n_realizations: int,
    workers: int,
    task: "_BlockTask",
) -> None:
    starts = range(0, n_realizations, DEFAULT_BLOCK_SIZE)
    bounds = [(s, min(s + DEFAULT_BLOCK_SIZE, n_realizations)) for s in starts]
    if workers <= 1:
        for start, stop in bounds:
            task(start, stop)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(lambda b: task(*b), bounds))


class _BlockTask:
    """Fills per-index signal and interference arrays for a block of realizations."""

    def __init__(
        self,
        cfg: NetworkConfig,
        receiver: Receiver,
        corr: CorrelationSpec,
        seed: int,
        n_realizations: int,
        stratify: bool,
    ) -> None:
        self.cfg = cfg
        self.receiver = receiver
        self.corr = corr
        self.seed = seed
        self.n = n_realizations
        self.stratify = stratify
        self.signal: NDArray[np.float64] = np.empty(n_realizations)
        self.interference: NDArray[np.float64] = np.empty(n_realizations)

    def __call__(self, start: int, stop: int) -> None:
        for index in range(start, stop):
            rng = realization_stream(self.seed, index)
            stratum = (index, self.n) if self.stratify else None
            self.signal[index], self.interference[index] = _signal_and_interference(
                self.cfg, self.receiver, self.corr, rng, stratum
            )


def estimate_sum_se(
    cfg: NetworkConfig,
    receiver: Receiver | None = None,
    corr: CorrelationSpec | None = None,
    n_realizations: int = DEFAULT_REALIZATIONS,
    seed: int = DEFAULT_SEED,
    *,
    workers: int = 1,
    stratify: bool = False,
) -> SeEstimate:
    """Estimate the ergodic sum SE lam E[log2(1 + SINR)].

    Realizations with neither noise nor residual interference are counted;
    their interference is replaced by the mean interference from beyond the
    window. The run is flagged when they exceed 0.1% of realizations.

    Args:
        cfg: Scenario.
        receiver: MRC (default) or ZF-SIC(L).
        corr: Receive correlation (None for i.i.d.).
        n_realizations: Realizations, at least 100.
        seed: Run seed.
        workers: Threads sharing the realizations; does not change the result.
        stratify: Stratify the link-distance variate over realizations.

    Returns:
        The estimate with its standard error.

    Example:
        >>> est = estimate_sum_se(NetworkConfig(), n_realizations=200, seed=1)
        >>> est.sum_se == est.density * est.per_link_se
        True
    """
    receiver = Receiver.mrc() if receiver is None else receiver
    corr = _resolve_corr(cfg, receiver, corr)
    require(
        n_realizations >= MIN_REALIZATIONS,
        f"need at least {MIN_REALIZATIONS} realizations, got {n_realizations}",
        parameter="n_realizations",
        value=n_realizations,
        condition=f"n >= {MIN_REALIZATIONS}",
    )
    require(seed >= 0, f"seed must be non-negative, got {seed}", parameter="seed", value=seed, condition="seed >= 0")

    task = _BlockTask(cfg, receiver, corr, seed, n_realizations, stratify)
    _run_blocks(n_realizations, workers, task)

    denominator = task.interference + cfg.inverse_snr
    degenerate = denominator == 0.0
    infinite_count = int(np.count_nonzero(degenerate))
    tail = window_tail_interference(cfg)
    if infinite_count:
        denominator = np.where(degenerate, tail, denominator)
    with np.errstate(divide="ignore"):
        rates = np.log2(1.0 + task.signal / denominator)

    per_link = float(np.sum(rates) / n_realizations)
    stderr = float(np.std(rates, ddof=1) / math.sqrt(n_realizations))
    flagged = infinite_count > INFINITE_SINR_FLAG_FRACTION * n_realizations
    if flagged and _is_logging_enabled():
        logger.warning(
            "%d of %d realizations had no noise and no residual interference (%s)",
            infinite_count,
            n_realizations,
            receiver.label,
        )
    return SeEstimate(
        sum_se=cfg.density * per_link,
        per_link_se=per_link,
        stderr=stderr if math.isfinite(stderr) else 0.0,
        n_realizations=n_realizations,
        seed=seed,
        density=cfg.density,
        receiver=receiver,
        infinite_sinr_count=infinite_count,
        window_tail_interference=tail,
        stratified=stratify,
        flagged=flagged,
    )


def _negative_moment_radius(cfg: NetworkConfig, tolerance: float) -> float:
    # Relative mean interference outside radius R: 2 (lam pi R^2)**(1 - alpha/2) / (alpha - 2)
    exponent = cfg.alpha / 2.0 - 1.0
    needed_count = (2.0 / ((cfg.alpha - 2.0) * tolerance)) ** (1.0 / exponent)
    return max(cfg.radius, math.sqrt(needed_count / (cfg.density * math.pi)))


def estimate_negative_moment(
    cfg: NetworkConfig,
    n_realizations: int,
    seed: int = DEFAULT_SEED,
    *,
    tail_tolerance: float = NEGATIVE_MOMENT_TAIL_TOLERANCE,
) -> NegativeMomentEstimate:
    """Estimate E[1/I] for a Poisson field with Exp(1) marks.

    The window is enlarged when needed so the mean interference left outside
    it is below ``tail_tolerance`` of the typical level.

    Args:
        cfg: Scenario (unbounded path loss).
        n_realizations: Realizations drawn.
        seed: Run seed.
        tail_tolerance: Allowed relative interference outside the window.

    Returns:
        The estimate, the closed-form value and the share of empty fields.
    """
    require_density(cfg.density)
    _require_realizations(n_realizations)
    require(
        cfg.pathloss == "unbounded",
        "negative moment is defined for the unbounded path-loss law",
        parameter="pathloss",
        value=cfg.pathloss,
        condition="pathloss = unbounded",
    )
    radius = _negative_moment_radius(cfg, tail_tolerance)
    if radius > cfg.radius and _is_logging_enabled():
        logger.warning("negative moment: sampling window enlarged to %.1f m", radius)

    inverse = np.full(n_realizations, np.nan)
    for index in range(n_realizations):
        rng = realization_stream(seed, index)
        distances = sample_interferer_distances(cfg, rng, radius)
        if distances.size == 0:
            continue
        marks = rng.exponential(size=distances.size)
        inverse[index] = 1.0 / float(np.sum(marks * distances**-cfg.alpha))

    used = inverse[~np.isnan(inverse)]
    empty_fraction = 1.0 - used.size / n_realizations
    flagged = empty_fraction > EMPTY_FIELD_FLAG_FRACTION
    if flagged and _is_logging_enabled():
        logger.warning("negative moment: %.2f%% of fields were empty", 100.0 * empty_fraction)
    mean = float(np.sum(used) / used.size) if used.size else math.nan
    stderr = float(np.std(used, ddof=1) / math.sqrt(used.size)) if used.size > 1 else 0.0
    return NegativeMomentEstimate(
        mean=mean,
        stderr=stderr,
        analytic=interference_negative_moment(cfg.density, cfg.alpha),
        n_used=int(used.size),
        empty_fraction=empty_fraction,
        window_radius=radius,
        flagged=flagged,
    )


def estimate_itlinq_probability(
    cfg: NetworkConfig,
    d: float,
    n_realizations: int,
    seed: int = DEFAULT_SEED,
) -> ProbabilityEstimate:
    """Estimate the probability of the ITLinQ destination condition at link distance d.

    The condition is sqrt(N_r P / (d**alpha sigma^2)) >= P / (d_1**alpha sigma^2)
    with d_1 the nearest-interferer distance; an empty field satisfies it.
    """
    require(d > 0.0, f"link distance must be positive, got {d}", parameter="d", value=d, condition="d > 0")
    _require_realizations(n_realizations)
    require(
        not cfg.is_interference_limited,
        "ITLinQ condition needs sigma^2 > 0",
        parameter="noise_power_mw",
        value=cfg.noise_power_mw,
        condition="sigma^2 > 0",
    )
    p, noise = cfg.tx_power_mw, cfg.noise_power_mw
    own = math.sqrt(cfg.n_rx * p / (d**cfg.alpha * noise))
    hits = 0
    for index in range(n_realizations):
        rng = realization_stream(seed, index)
        distances = sample_interferer_distances(cfg, rng)
        if distances.size == 0:
            hits += 1
            continue
        nearest = float(np.min(distances))
        if own >= p / (nearest**cfg.alpha * noise):
            hits += 1
    probability = hits / n_realizations
    return ProbabilityEstimate(
        probability=probability,
        stderr=math.sqrt(probability * (1.0 - probability) / n_realizations),
        analytic=itlinq_probability(cfg.density, p, noise, cfg.n_rx, cfg.alpha, d),
        n_realizations=n_realizations,
    )


def _mean_estimate(samples: NDArray[np.float64]) -> MeanEstimate:
    n = samples.size
    return MeanEstimate(
        mean=float(np.sum(samples) / n),
        stderr=float(np.std(samples, ddof=1) / math.sqrt(n)) if n > 1 else 0.0,
        n_realizations=n,
    )


def estimate_mean_interference(
    cfg: NetworkConfig, n_realizations: int, seed: int = DEFAULT_SEED
) -> MeanEstimate:
    """Sample mean of I = sum H_l l(d_l) under the configured path-loss law."""
    _require_realizations(n_realizations)
    samples = np.empty(n_realizations)
    for index in range(n_realizations):
        rng = realization_stream(seed, index)
        distances = sample_interferer_distances(cfg, rng)
        marks = rng.exponential(size=distances.size)
        samples[index] = float(np.sum(marks * cfg.path_loss(distances)))
    return _mean_estimate(samples)


def estimate_sic_interference_mean(
    cfg: NetworkConfig, cancel: int, n_realizations: int, seed: int = DEFAULT_SEED
) -> MeanEstimate:
    """Sample mean of the interference beyond the L nearest interferers."""
    require(cancel >= 1, f"L must be at least 1, got {cancel}", parameter="L", value=cancel, condition="L >= 1")
    _require_realizations(n_realizations)
    samples = np.empty(n_realizations)
    for index in range(n_realizations):
        rng = realization_stream(seed, index)
        field = sample_interferer_field(cfg, rng)
        residual = field.distances[cancel:]
        marks = rng.exponential(size=residual.size)
        samples[index] = float(np.sum(marks * cfg.path_loss(residual)))
    return _mean_estimate(samples)
