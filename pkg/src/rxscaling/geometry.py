"""Spatial sampling around the typical receiver.

The typical receiver sits at the origin. Its own transmitter is at a random
distance drawn uniformly over the annulus 1 <= d <= R_d, and the other
transmitters form a homogeneous Poisson field of density lambda, truncated to
the disk of radius R_sim. Poisson counts come from numpy's generator
(multiplication method below mean 10, Hormann's PTRS above).
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray

from ._utils import require
from .types.network import InterfererField, NetworkConfig

__all__ = [
    "sample_interferer_field",
    "sample_interferer_distances",
    "sample_link_distance",
    "separate_ties",
]


def sample_interferer_distances(
    cfg: NetworkConfig, rng: np.random.Generator, radius: float | None = None
) -> NDArray[np.float64]:
    """Draw interferer distances in the window, in generation order.

    Args:
        cfg: Scenario; only the density and window radius are used.
        rng: Caller-owned random stream.
        radius: Window radius overriding ``cfg.radius``.

    Returns:
        Unsorted distances of the K ~ Poisson(lambda * pi * radius**2) points.
    """
    radius = cfg.radius if radius is None else radius
    mean_count = cfg.density * math.pi * radius * radius
    count = int(rng.poisson(mean_count)) if mean_count > 0.0 else 0
    # Uniform in the disk: r = R * sqrt(U)
    return radius * np.sqrt(rng.random(count))


def separate_ties(distances: NDArray[np.float64]) -> NDArray[np.float64]:
    """Make sorted distances strictly increasing.

    A value equal to its predecessor is moved to the next representable
    float, so insertion order decides exact ties.
    """
    if distances.size < 2 or bool(np.all(np.diff(distances) > 0.0)):
        return distances
    fixed = distances.copy()
    for i in range(1, fixed.size):
        if fixed[i] <= fixed[i - 1]:
            fixed[i] = np.nextafter(fixed[i - 1], np.inf)
    return fixed


def sample_interferer_field(cfg: NetworkConfig, rng: np.random.Generator) -> InterfererField:
    """Draw the interferer field seen by the typical receiver.

    Interferers may fall arbitrarily close to the origin; the unit inner
    radius applies only to the direct link.

    Args:
        cfg: Scenario.
        rng: Caller-owned random stream.

    Returns:
        The field with distances in ascending order.

    Example:
        >>> rng = np.random.default_rng(7)
        >>> field = sample_interferer_field(NetworkConfig(), rng)
        >>> bool(np.all(np.diff(field.distances) > 0))
        True
    """
    distances = sample_interferer_distances(cfg, rng)
    distances = separate_ties(np.sort(distances, kind="stable"))
    return InterfererField(distances=distances, radius=cfg.radius)


def sample_link_distance(
    cfg: NetworkConfig,
    rng: np.random.Generator,
    stratum: tuple[int, int] | None = None,
) -> float:
    """Draw the direct-link distance with density 2d / (R_d**2 - 1) on [1, R_d].

    Args:
        cfg: Scenario.
        rng: Caller-owned random stream.
        stratum: Optional ``(i, n)``; the uniform variate is confined to
            ``[i/n, (i+1)/n)`` for stratified sampling.

    Returns:
        The link distance in metres.
    """
    u = float(rng.random())
    if stratum is not None:
        index, count = stratum
        require(
            0 <= index < count,
            f"stratum {index} outside 0..{count - 1}",
            parameter="stratum",
            value=stratum,
            condition="0 <= i < n",
        )
        u = (index + u) / count
    r2 = cfg.comm_range * cfg.comm_range
    return math.sqrt(1.0 + u * (r2 - 1.0))
