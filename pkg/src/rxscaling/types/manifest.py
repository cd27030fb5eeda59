"""Run manifest written next to every CLI output."""

from __future__ import annotations

from datetime import datetime
from typing import Any

from pydantic import BaseModel, ConfigDict


class RunManifest(BaseModel):
    """Everything needed to re-run a CLI command bit-for-bit."""

    model_config = ConfigDict(extra="allow")

    command: str
    """Sub-command name."""

    argv: list[str]
    """Arguments after the program name, as executed."""

    config: dict[str, Any]
    """Resolved NetworkConfig."""

    seed: int | None = None
    """Monte Carlo seed, when the command samples."""

    version: str
    """Package version."""

    created_at: datetime
    """UTC timestamp of the run."""

    outputs: list[str] = []
    """Files the run wrote."""

    units: dict[str, str] = {
        "value": "bit/s/Hz/m^2",
        "per_link": "bit/s/Hz",
        "lambda": "1/m^2",
    }
    """Units of the CSV columns."""
