"""Reproducible random streams.

Every Monte Carlo realization draws from its own generator, keyed by the run
seed and the realization index. Results therefore do not depend on how
realizations are split across workers or in which order blocks finish.
"""

from __future__ import annotations

import numpy as np

__all__ = ["realization_stream"]


def realization_stream(seed: int, index: int) -> np.random.Generator:
    """Return the generator for realization ``index`` of a run seeded ``seed``.

    Args:
        seed: Non-negative run seed.
        index: Realization index (0-based).

    Returns:
        A PCG64-backed generator unique to ``(seed, index)``.
    """
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return np.random.default_rng(sequence)

