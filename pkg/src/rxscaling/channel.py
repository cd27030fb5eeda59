"""Fading vectors and their reduction to post-combining gains.

Entries are i.i.d. CN(0, 1), so without correlation the MRC direct gain is
Gamma(N_r, 1) and every interference gain is Exp(1). With correlation the
vectors are coloured by C^(1/2) before combining. Vectors are stored as rows:
row 0 is the direct link, row j the j-th nearest interferer.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import toeplitz

from ._exceptions import InvalidParameterError
from .types.channel import CorrelationSpec, EffectiveGains, Receiver, ZfSicGains

__all__ = [
    "correlation_matrix",
    "correlation_eigenvalues",
    "correlation_sqrt",
    "draw_vectors",
    "sample_mrc_gains",
    "sample_zfsic_gains",
]

_HALF_SQRT = np.sqrt(0.5)


def correlation_matrix(corr: CorrelationSpec) -> NDArray[np.float64]:
    """Build the N_r x N_r receive correlation matrix C.

    Explicit specs carry eigenvalues only and are realised in their own
    eigenbasis, C = diag(mu_1, ..., mu_r, 0, ...).
    """
    n = corr.n_rx
    if corr.kind == "none":
        return np.eye(n)
    if corr.kind == "exponential":
        return np.asarray(toeplitz(corr.rho ** np.arange(n)), dtype=np.float64)
    values = np.zeros(n)
    eig = np.asarray(corr.eigenvalues, dtype=np.float64)
    values[: eig.size] = eig
    return np.diag(values)


def correlation_eigenvalues(corr: CorrelationSpec) -> NDArray[np.float64]:
    """Positive eigenvalues of C in descending order.

    Args:
        corr: A validated correlation spec.

    Returns:
        mu_1 >= ... >= mu_r > 0. For the exponential model they sum to N_r.
    """
    if corr.kind == "explicit":
        eig = np.asarray(corr.eigenvalues, dtype=np.float64)
        return eig[eig > 0.0]
    eig = np.linalg.eigvalsh(correlation_matrix(corr))[::-1]
    if eig[-1] < -1e-12 * max(1.0, eig[0]):
        raise InvalidParameterError(
            "correlation matrix is not positive semi-definite",
            parameter="corr",
            value=corr.label,
            condition="C >= 0",
        )
    return np.clip(eig, 0.0, None)[eig > 1e-14 * eig[0]]


@lru_cache(maxsize=64)
def correlation_sqrt(corr: CorrelationSpec) -> NDArray[np.float64]:
    """Symmetric square root V diag(sqrt(mu)) V^T of C (read-only, cached)."""
    eig, vec = np.linalg.eigh(correlation_matrix(corr))
    root = (vec * np.sqrt(np.clip(eig, 0.0, None))) @ vec.T
    root.setflags(write=False)
    return root


def draw_vectors(
    count: int, corr: CorrelationSpec, rng: np.random.Generator
) -> NDArray[np.complex128]:
    """Draw ``count`` fading vectors as rows, coloured when correlated."""
    raw = rng.standard_normal((count, corr.n_rx, 2))
    vectors = (raw[..., 0] + 1j * raw[..., 1]) * _HALF_SQRT
    if not corr.is_identity:
        vectors = vectors @ correlation_sqrt(corr)
    return vectors


def _combine(vectors: NDArray[np.complex128]) -> tuple[float, NDArray[np.float64]]:
    norm = np.linalg.norm(vectors[0])
    gains = np.abs(vectors[1:] @ np.conj(vectors[0] / norm)) ** 2
    return float(norm * norm), gains


def sample_mrc_gains(
    field_size: int, corr: CorrelationSpec, rng: np.random.Generator
) -> EffectiveGains:
    """Draw one realization and reduce it to MRC gains.

    The combiner is w = h / ||h||, so the direct gain is ||h||**2 and the
    gain of interferer l is |w^H h_l|**2.

    Args:
        field_size: Number of interferers K (>= 0).
        corr: Receive correlation; ``corr.n_rx`` is the antenna count.
        rng: Caller-owned random stream.

    Returns:
        Direct gain and one interference gain per interferer.
    """
    if field_size < 0:
        raise InvalidParameterError(
            f"field size must be non-negative, got {field_size}",
            parameter="field_size",
            value=field_size,
            condition="K >= 0",
        )
    vectors = draw_vectors(field_size + 1, corr, rng)
    direct, gains = _combine(vectors)
    return EffectiveGains(direct_gain=direct, interference_gains=gains)


def sample_zfsic_gains(
    field_distances: NDArray[np.float64],
    corr: CorrelationSpec,
    cancel: int,
    rng: np.random.Generator,
) -> ZfSicGains:
    """Draw one realization and reduce it to ZF-SIC gains.

    The direct vector and the vectors of the ``cancel`` nearest interferers
    are QR-decomposed; the direct gain is |R[0, 0]|**2 and each remaining
    interferer j keeps |q_1^H h_j|**2. Consumes the stream exactly like
    :func:`sample_mrc_gains`, so with ``cancel=0`` both return the same gains.

    Args:
        field_distances: Ascending interferer distances (only the count is used).
        corr: Must be uncorrelated.
        cancel: Interferers to cancel, L <= N_r - 1. If the field holds fewer,
            all of them are cancelled.
        rng: Caller-owned random stream.

    Returns:
        Gains of the residual interferers, aligned with
        ``field_distances[cancelled:]``.

    Raises:
        AntennaBudgetError: If L >= N_r.
        InvalidParameterError: If ``corr`` is correlated.
    """
    Receiver.zfsic(cancel).check_budget(corr.n_rx)
    if not corr.is_identity:
        raise InvalidParameterError(
            "ZF-SIC is only defined for uncorrelated fading",
            parameter="corr",
            value=corr.label,
            condition="corr = none",
        )
    count = int(len(field_distances))
    vectors = draw_vectors(count + 1, corr, rng)
    cancelled = min(cancel, count)
    if cancelled == 0:
        direct, gains = _combine(vectors)
        return ZfSicGains(direct_gain=direct, interference_gains=gains, cancelled=0)
    # Columns are [h_direct, h_1, ..., h_L]; LAPACK may return a negative R[0, 0]
    q, r = np.linalg.qr(vectors[: cancelled + 1].T, mode="reduced")
    gains = np.abs(vectors[1:] @ np.conj(q[:, 0])) ** 2
    return ZfSicGains(
        direct_gain=float(abs(r[0, 0]) ** 2),
        interference_gains=gains[cancelled:],
        cancelled=cancelled,
    )
