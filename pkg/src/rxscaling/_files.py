"""Configuration files, grid strings, CSV tables and run manifests."""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, cast

import numpy as np
import pandas as pd

from ._constants import CSV_COLUMNS
from ._exceptions import ConfigFileError
from ._types import CONFIG_KEYS, ConfigValues
from ._utils import dbm_to_mw
from ._version import __version__
from .types.manifest import RunManifest
from .types.network import NetworkConfig

_INT_KEYS = frozenset({"n_rx"})
_TEXT_KEYS = frozenset({"pathloss"})


def _convert(key: str, raw: str) -> float | int | str:
    if key in _TEXT_KEYS:
        return raw
    if key in _INT_KEYS:
        return int(raw)
    return float(raw)


def load_config_file(path: str | Path) -> ConfigValues:
    """Parse a flat ``key=value`` configuration file.

    Blank lines and ``#`` comments are ignored. Keys are those of
    :data:`CONFIG_KEYS`; a key given twice keeps its last value.

    Args:
        path: File to read.

    Returns:
        The values found, converted to numbers where applicable.

    Raises:
        ConfigFileError: On unreadable files, unknown keys or bad values.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigFileError(f"cannot read config: {exc.strerror}", path=str(path)) from exc

    values: dict[str, float | int | str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        key, sep, raw = content.partition("=")
        key, raw = key.strip().lower(), raw.strip()
        if not sep or not raw:
            raise ConfigFileError(f"expected key=value, got {content!r}", path=str(path), line_number=number)
        if key not in CONFIG_KEYS:
            raise ConfigFileError(f"unknown key {key!r}", path=str(path), line_number=number)
        try:
            values[key] = _convert(key, raw)
        except ValueError:
            raise ConfigFileError(f"bad value for {key}: {raw!r}", path=str(path), line_number=number) from None
    return cast(ConfigValues, values)


def network_config_from_values(values: Mapping[str, Any], base: NetworkConfig | None = None) -> NetworkConfig:
    """Apply config-file keys (powers in dBm) on top of ``base``.

    Args:
        values: Keys of :data:`CONFIG_KEYS`; missing keys keep ``base``.
        base: Starting scenario; the defaults when None.

    Returns:
        The validated scenario.
    """
    base = NetworkConfig() if base is None else base
    changes: dict[str, Any] = {}
    renames = {"density": "density", "alpha": "alpha", "r_d": "comm_range", "n_rx": "n_rx", "pathloss": "pathloss", "r_sim": "sim_radius"}
    for key, field in renames.items():
        if values.get(key) is not None:
            changes[field] = values[key]
    if values.get("p_dbm") is not None:
        changes["tx_power_mw"] = dbm_to_mw(float(values["p_dbm"]))
    if values.get("sigma2_dbm") is not None:
        changes["noise_power_mw"] = dbm_to_mw(float(values["sigma2_dbm"]))
    return base.with_updates(**changes) if changes else base


def parse_grid(text: str) -> tuple[float, ...]:
    """Parse ``"lam_min:lam_max:n_points"`` into a geometric grid.

    Raises:
        ConfigFileError: If the string is malformed, the bounds are not
            0 < lam_min < lam_max, or fewer than 2 points are requested.
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigFileError(f"grid must be lam_min:lam_max:n_points, got {text!r}")
    try:
        low, high, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigFileError(f"grid must be lam_min:lam_max:n_points, got {text!r}") from None
    if not (0.0 < low < high and math.isfinite(high)) or count < 2:
        raise ConfigFileError(f"grid needs 0 < lam_min < lam_max and n_points >= 2, got {text!r}")
    grid = np.geomspace(low, high, count)
    return tuple(float(v) for v in grid)


def rows_to_frame(rows: Sequence[Mapping[str, Any]]) -> pd.DataFrame:
    """Build the output table with the fixed CSV column order."""
    frame = pd.DataFrame.from_records(list(rows), columns=list(CSV_COLUMNS))
    return frame


def write_csv(frame: pd.DataFrame, out: str | Path | None) -> str:
    """Write ``frame`` to ``out`` (stdout when None) and return the CSV text."""
    text = frame.to_csv(index=False, float_format="%.12g")
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
    return text


def manifest_path(out: str | Path) -> Path:
    """Manifest location for an output file: ``<out>.manifest.json``."""
    out = Path(out)
    return out.with_name(out.name + ".manifest.json")


def write_manifest(
    out: str | Path,
    *,
    command: str,
    argv: Sequence[str],
    config: NetworkConfig,
    seed: int | None,
    extra: Mapping[str, Any] | None = None,
) -> Path:
    """Write the manifest beside ``out`` and return its path."""
    manifest = RunManifest(
        command=command,
        argv=list(argv),
        config=config.model_dump(mode="json"),
        seed=seed,
        version=__version__,
        created_at=datetime.now(timezone.utc),
        outputs=[str(out)],
        **dict(extra or {}),
    )
    path = manifest_path(out)
    path.write_text(manifest.model_dump_json(indent=2), encoding="utf-8")
    return path


def read_manifest(path: str | Path) -> RunManifest:
    """Load a manifest written by :func:`write_manifest`.

    Raises:
        ConfigFileError: If the file is missing or not a manifest.
    """
    path = Path(path)
    try:
        return RunManifest.model_validate_json(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigFileError(f"cannot read manifest: {exc.strerror}", path=str(path)) from exc
    except ValueError as exc:
        raise ConfigFileError(f"not a run manifest: {exc}", path=str(path)) from exc
