"""Shared test fixtures for the rxscaling tests."""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

import numpy as np
import pytest

from rxscaling import NetworkConfig
from rxscaling._constants import ENV_VAR_LOG


@pytest.fixture
def reference_config() -> NetworkConfig:
    """Reference scenario: alpha=4, R_d=50 m, P=20 dBm, sigma^2=-104 dBm, N_r=4."""
    return NetworkConfig.from_dbm(density=5e-5, alpha=4.0, comm_range=50.0, n_rx=4)


@pytest.fixture
def sir_config() -> NetworkConfig:
    """Interference-limited variant of the reference scenario."""
    return NetworkConfig(density=1e-4, alpha=4.0, comm_range=50.0, n_rx=4, noise_power_mw=0.0)


@pytest.fixture
def wide_window_config(reference_config: NetworkConfig) -> NetworkConfig:
    """Reference scenario with R_sim = 40 R_d so window truncation is negligible."""
    return reference_config.with_updates(sim_radius=2000.0)


@pytest.fixture
def rng() -> np.random.Generator:
    """Provide a seeded generator."""
    return np.random.default_rng(20160101)


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    """Provide a key=value scenario file."""
    path = tmp_path / "scenario.cfg"
    path.write_text(
        "# reference scenario\n"
        "density = 5e-5\n"
        "alpha = 4\n"
        "r_d = 50\n"
        "n_rx = 4   # antennas\n"
        "p_dbm = 20\n"
        "sigma2_dbm = -104\n",
        encoding="utf-8",
    )
    return path


@pytest.fixture
def diagnostics(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Enable the package's gated warnings."""
    monkeypatch.setenv(ENV_VAR_LOG, "1")
    yield
