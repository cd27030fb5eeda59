"""Internal utilities for rxscaling."""

from __future__ import annotations

import logging
import math
import os

from ._constants import ENV_VAR_LOG
from ._exceptions import InvalidParameterError

logger = logging.getLogger("rxscaling")


def _is_logging_enabled() -> bool:
    """Check if diagnostic logging is enabled via environment variable.

    Returns:
        True if RXSCALING_LOG is set to a truthy value.
    """
    log_value = os.environ.get(ENV_VAR_LOG, "").lower()
    return log_value in ("1", "true", "yes", "on", "debug")


def dbm_to_mw(dbm: float) -> float:
    """Convert a power in dBm to milliwatts (-inf maps to 0)."""
    if math.isinf(dbm) and dbm < 0:
        return 0.0
    return float(10.0 ** (dbm / 10.0))


def require(ok: bool, message: str, *, parameter: str, value: object, condition: str) -> None:
    """Raise InvalidParameterError unless ``ok`` holds.

    Args:
        ok: Result of the precondition check.
        message: Human-readable error description.
        parameter: Name of the checked parameter.
        value: Value that was checked.
        condition: The precondition, as it should be printed.

    Raises:
        InvalidParameterError: If ``ok`` is False.
    """
    if not ok:
        raise InvalidParameterError(
            message, parameter=parameter, value=value, condition=condition
        )


def require_alpha(alpha: float) -> None:
    require(
        alpha > 2.0,
        f"path-loss exponent must exceed 2, got {alpha}",
        parameter="alpha",
        value=alpha,
        condition="alpha > 2",
    )


def require_density(lam: float) -> None:
    require(
        lam > 0.0 and math.isfinite(lam),
        f"density must be positive, got {lam}",
        parameter="density",
        value=lam,
        condition="lambda > 0",
    )
