"""Type definitions for rxscaling."""

from .channel import CorrelationSpec, EffectiveGains, Receiver, ZfSicGains
from .manifest import RunManifest
from .network import InterfererField, NetworkConfig
from .results import (
    AnalyticValue,
    MeanEstimate,
    NegativeMomentEstimate,
    ProbabilityEstimate,
    SeEstimate,
)
from .sweep import ExponentFit, SweepResult, SweepRow, SweepSpec

__all__ = [
    # Network
    "NetworkConfig",
    "InterfererField",
    # Channel
    "Receiver",
    "CorrelationSpec",
    "EffectiveGains",
    "ZfSicGains",
    # Results
    "SeEstimate",
    "NegativeMomentEstimate",
    "ProbabilityEstimate",
    "MeanEstimate",
    "AnalyticValue",
    # Sweeps
    "SweepSpec",
    "SweepRow",
    "SweepResult",
    "ExponentFit",
    # CLI
    "RunManifest",
]
