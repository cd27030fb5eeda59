#!/usr/bin/env python3
"""Run the antenna-scaling study and summarise the fitted exponents.

For each receiver and each antenna-scaling exponent beta, sweeps the density
with N_r = ceil(c * lambda**beta), fits the per-link spectral efficiency over
the top half of the grid and prints the slope next to the predicted regime.

Usage:
    python scripts/scaling_study.py [OUTPUT_DIR]

Output:
    OUTPUT_DIR/sweep_<receiver>_beta<beta>.csv - one table per sweep
    (defaults to ./scaling-study)
"""

from __future__ import annotations

import sys
from pathlib import Path

from rxscaling import (
    InsufficientDataError,
    NetworkConfig,
    RxScalingError,
    SweepSpec,
    classify_regime,
    fit_asymptotic_exponent,
    run_sweep,
)
from rxscaling._files import parse_grid, write_csv

GRID = "1e-5:1e-2:13"
C = 4.0
BETAS = (0.0, 0.5, 1.0, 1.5, 2.0)
RECEIVERS = ("mrc", "zfsic")


def run_study(out_dir: Path) -> int:
    """Run every (receiver, beta) sweep and return the number of failures."""
    out_dir.mkdir(parents=True, exist_ok=True)
    base = NetworkConfig(alpha=4.0, noise_power_mw=0.0)
    densities = parse_grid(GRID)
    failures = 0

    print(f"{'receiver':<8} {'beta':>5} {'slope':>8} {'r^2':>6}  regime")
    for receiver in RECEIVERS:
        for beta in BETAS:
            spec = SweepSpec(
                densities=densities,
                c=C,
                beta=beta,
                receiver=receiver,
                methods=("lower", "upper"),
                base=base,
            )
            try:
                result = run_sweep(spec)
                fit = fit_asymptotic_exponent(result, "lower")
            except InsufficientDataError as exc:
                print(f"{receiver:<8} {beta:>5.2f} {'-':>8} {'-':>6}  {exc}", file=sys.stderr)
                failures += 1
                continue
            except RxScalingError as exc:
                print(f"Error: {receiver} beta={beta}: {exc}", file=sys.stderr)
                failures += 1
                continue

            write_csv(result.to_frame(), out_dir / f"sweep_{receiver}_beta{beta:g}.csv")
            regime = classify_regime(beta, receiver, base.alpha)
            print(f"{receiver:<8} {beta:>5.2f} {fit.slope:>8.3f} {fit.r_squared:>6.3f}  {regime}")

    return failures


def main() -> None:
    """Main entry point."""
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("scaling-study")
    failures = run_study(out_dir)
    print(f"\nTables written to {out_dir}/")
    if failures:
        sys.exit(1)


if __name__ == "__main__":
    main()
