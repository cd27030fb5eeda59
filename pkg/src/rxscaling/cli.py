"""Command-line front end.

Sub-commands ``simulate``, ``analytic``, ``bounds``, ``sweep`` and
``validate`` share the scenario options below. Results are CSV tables with
the columns of :data:`CSV_COLUMNS`; with ``--out`` a manifest is written
beside the table and ``rxscaling --from-manifest <manifest>`` repeats the
run from it.

Example:
    $ rxscaling simulate scenario.cfg --n-rx 8 --receiver zfsic:7 --out zf.csv
    $ rxscaling sweep --beta 2 --c 5e4 --grid 3e-4:1e-1:11 --methods exact,lower,upper
    $ rxscaling --from-manifest zf.csv.manifest.json --out zf-again.csv
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys
from collections.abc import Callable, Sequence
from typing import Any

import pandas as pd
from pydantic import ValidationError

from ._constants import (
    DEFAULT_REALIZATIONS,
    DEFAULT_SEED,
    ENV_VAR_LOG,
    EXIT_NUMERIC,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION_FAILED,
)
from ._exceptions import InvalidParameterError, RxScalingError, exit_code_for
from ._files import (
    load_config_file,
    network_config_from_values,
    parse_grid,
    read_manifest,
    rows_to_frame,
    write_csv,
    write_manifest,
)
from ._types import CONFIG_KEYS, SweepMethod
from ._utils import _is_logging_enabled, logger
from ._version import __version__
from .analytic import (
    bounded_pl_lower_bound,
    corr_scaling_lower_bound,
    corr_sum_se_lower,
    itlinq_probability,
    mrc_closed_form_siso,
    mrc_lower_bound,
    mrc_sum_se_exact,
    mrc_upper_bound,
    optimal_density,
    sic_lower_bound,
    sic_sum_se_exact,
    sic_upper_bound,
)
from .channel import correlation_eigenvalues
from .scaling import run_sweep
from .simulator import estimate_sum_se
from .types.channel import CorrelationSpec, Receiver
from .types.network import NetworkConfig
from .types.results import AnalyticValue
from .types.sweep import SweepSpec
from .validation import run_validation

__all__ = ["build_parser", "main"]

EXPRESSIONS = (
    "mrc_exact",
    "sic_exact",
    "mrc_lower",
    "mrc_upper",
    "sic_lower",
    "sic_upper",
    "corr_lower",
    "bounded_lower",
    "siso_closed",
    "optimal_density",
    "itlinq",
)
SWEEP_METHODS: tuple[SweepMethod, ...] = ("mc", "exact", "lower", "upper")

Row = dict[str, Any]


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _scenario_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("config", nargs="?", help="key=value scenario file (" + ", ".join(CONFIG_KEYS) + ")")
    group = parent.add_argument_group("scenario (overrides the file)")
    group.add_argument("--density", type=float, help="transmitter density lambda (1/m^2)")
    group.add_argument("--alpha", type=float, help="path-loss exponent (> 2)")
    group.add_argument("--r-d", dest="r_d", type=float, help="communication range R_d (m)")
    group.add_argument("--n-rx", dest="n_rx", type=int, help="receive antennas N_r")
    group.add_argument("--p-dbm", dest="p_dbm", type=float, help="transmit power (dBm)")
    group.add_argument("--sigma2-dbm", dest="sigma2_dbm", type=float, help="noise power (dBm), -inf for none")
    group.add_argument("--pathloss", choices=("unbounded", "bounded"), help="interferer path-loss law")
    group.add_argument("--r-sim", dest="r_sim", type=float, help="simulation window radius (m)")
    parent.add_argument("--out", help="CSV output path (stdout when omitted)")
    parent.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    return parent


def _monte_carlo_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--realizations", type=_non_negative_int, default=DEFAULT_REALIZATIONS)
    parser.add_argument("--seed", type=_non_negative_int, default=DEFAULT_SEED)
    parser.add_argument("--threads", type=int, default=1, help="worker threads; results do not depend on it")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser for every sub-command."""
    parser = argparse.ArgumentParser(prog="rxscaling", description="Sum spectral efficiency of dense multi-antenna networks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--from-manifest", dest="from_manifest", help="repeat the run recorded in a manifest")
    parser.add_argument("--out", dest="replay_out", help="output path for --from-manifest")
    parser.add_argument("-v", "--verbose", dest="replay_verbose", action="store_true", help=argparse.SUPPRESS)
    common = _scenario_options()
    commands = parser.add_subparsers(dest="command")

    simulate = commands.add_parser("simulate", parents=[common], help="Monte Carlo sum SE")
    simulate.add_argument("--receiver", default="mrc", help="mrc | zfsic:L")
    simulate.add_argument("--corr", default="none", help="none | exp:rho")
    simulate.add_argument("--stratify", action="store_true", help="stratify the link-distance variate")
    _monte_carlo_options(simulate)

    analytic = commands.add_parser("analytic", parents=[common], help="one analytic expression")
    analytic.add_argument("--expr", required=True, choices=EXPRESSIONS)
    analytic.add_argument("--cancel", type=int, help="L for sic_* (default N_r - 1)")
    analytic.add_argument("--corr", default="none", help="none | exp:rho (corr_lower)")
    analytic.add_argument("--link-distance", dest="link_distance", type=float, help="d for siso_closed / itlinq")

    bounds = commands.add_parser("bounds", parents=[common], help="available bounds and the exact value at sigma^2 = 0")
    bounds.add_argument("--receiver", default="mrc", help="mrc | zfsic:L")
    bounds.add_argument("--corr", default="none", help="none | exp:rho")

    sweep = commands.add_parser("sweep", parents=[common], help="density sweep with N_r = ceil(c lambda^beta)")
    sweep.add_argument("--beta", type=float, required=True)
    sweep.add_argument("--c", type=float, required=True)
    sweep.add_argument("--grid", required=True, help="lam_min:lam_max:n_points (geometric)")
    sweep.add_argument("--methods", default="exact", help="comma list of " + ",".join(SWEEP_METHODS))
    sweep.add_argument("--receiver", choices=("mrc", "zfsic"), default="mrc")
    sweep.add_argument("--keep-noise", dest="keep_noise", action="store_true", help="keep sigma^2 for mc and exact")
    _monte_carlo_options(sweep)

    validate = commands.add_parser("validate", parents=[common], help="Monte Carlo versus analytic battery")
    validate.add_argument("--quick", action="store_true", help="reduced grids and realization counts")
    return parser


def _resolve_config(args: argparse.Namespace) -> NetworkConfig:
    values: dict[str, Any] = dict(load_config_file(args.config)) if args.config else {}
    for key in CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    return network_config_from_values(values)


def _row(cfg: NetworkConfig, receiver: Receiver, corr: str, method: str, value: float | None, **extra: Any) -> Row:
    row: Row = {
        "lambda": cfg.density,
        "n_rx": cfg.n_rx,
        "receiver": receiver.kind,
        "L": receiver.cancel,
        "corr": corr,
        "method": method,
        "value": value,
    }
    row.update(extra)
    return row


def _analytic_row(cfg: NetworkConfig, receiver: Receiver, corr: str, result: AnalyticValue) -> Row:
    return _row(
        cfg,
        receiver,
        corr,
        result.method,
        result.value,
        abs_err=result.abs_error_estimate,
        per_link=result.per_link,
        expression=result.expression,
    )


def _cmd_simulate(args: argparse.Namespace, cfg: NetworkConfig) -> list[Row]:
    receiver = Receiver.parse(args.receiver)
    corr = CorrelationSpec.parse(args.corr, cfg.n_rx)
    est = estimate_sum_se(
        cfg,
        receiver,
        corr,
        args.realizations,
        args.seed,
        workers=args.threads,
        stratify=args.stratify,
    )
    return [
        _row(
            cfg,
            receiver,
            corr.label,
            "mc",
            est.sum_se,
            stderr=est.sum_stderr,
            n=est.n_realizations,
            seed=est.seed,
            per_link=est.per_link_se,
        )
    ]


def _cmd_analytic(args: argparse.Namespace, cfg: NetworkConfig) -> list[Row]:
    expr: str = args.expr
    cancel = cfg.n_rx - 1 if args.cancel is None else args.cancel
    mrc = Receiver.mrc()
    if expr in ("sic_exact", "sic_lower", "sic_upper"):
        receiver = Receiver.zfsic(cancel)
        if expr == "sic_exact":
            result = sic_sum_se_exact(cfg, cancel)
        elif expr == "sic_lower":
            result = sic_lower_bound(cfg, cancel)
        else:
            result = sic_upper_bound(cfg)
        return [_analytic_row(cfg, receiver, "none", result)]

    simple: dict[str, Callable[[NetworkConfig], AnalyticValue]] = {
        "mrc_exact": mrc_sum_se_exact,
        "mrc_lower": mrc_lower_bound,
        "mrc_upper": mrc_upper_bound,
        "bounded_lower": bounded_pl_lower_bound,
    }
    if expr in simple:
        return [_analytic_row(cfg, mrc, "none", simple[expr](cfg))]
    if expr == "corr_lower":
        corr = CorrelationSpec.parse(args.corr, cfg.n_rx)
        result = corr_sum_se_lower(cfg, correlation_eigenvalues(corr).tolist())
        return [_analytic_row(cfg, mrc, corr.label, result)]
    if expr == "siso_closed":
        d = args.link_distance or 1.0 / math.sqrt(cfg.density * math.pi)
        rate = mrc_closed_form_siso(cfg.density, d)
        row = _row(cfg, mrc, "none", "closed_form", cfg.density * rate, per_link=rate, abs_err=0.0)
        return [{**row, "n_rx": 1}]
    if expr == "optimal_density":
        lam = optimal_density(cfg.n_rx, cfg.alpha, cfg.comm_range)
        return [{**_row(cfg, mrc, "none", "closed_form", lam, abs_err=0.0), "lambda": lam}]
    d = args.link_distance or cfg.comm_range
    probability = itlinq_probability(cfg.density, cfg.tx_power_mw, cfg.noise_power_mw, cfg.n_rx, cfg.alpha, d)
    return [_row(cfg, mrc, "none", "closed_form", probability, abs_err=0.0)]


def _cmd_bounds(args: argparse.Namespace, cfg: NetworkConfig) -> list[Row]:
    cfg = cfg.interference_limited()
    receiver = Receiver.parse(args.receiver)
    corr = CorrelationSpec.parse(args.corr, cfg.n_rx)
    evaluations: list[tuple[Receiver, str, Callable[[], AnalyticValue]]] = []
    if receiver.kind == "zfsic":
        cancel = receiver.cancel
        evaluations += [
            (receiver, "none", lambda: sic_lower_bound(cfg, cancel)),
            (receiver, "none", lambda: sic_sum_se_exact(cfg, cancel)),
        ]
        if cancel == cfg.n_rx - 1:
            evaluations.append((receiver, "none", lambda: sic_upper_bound(cfg)))
    elif cfg.pathloss == "bounded":
        evaluations.append((receiver, "none", lambda: bounded_pl_lower_bound(cfg)))
    elif not corr.is_identity:
        eigenvalues = correlation_eigenvalues(corr).tolist()
        evaluations += [
            (receiver, corr.label, lambda: corr_scaling_lower_bound(cfg, eigenvalues)),
            (receiver, corr.label, lambda: corr_sum_se_lower(cfg, eigenvalues)),
        ]
    else:
        evaluations += [
            (receiver, "none", lambda: mrc_lower_bound(cfg)),
            (receiver, "none", lambda: mrc_sum_se_exact(cfg)),
            (receiver, "none", lambda: mrc_upper_bound(cfg)),
        ]
    rows = []
    for rx, label, evaluate in evaluations:
        try:
            rows.append(_analytic_row(cfg, rx, label, evaluate()))
        except InvalidParameterError as exc:
            if _is_logging_enabled():
                logger.warning("bounds: skipped (%s)", exc)
    return rows


def _parse_methods(text: str) -> tuple[SweepMethod, ...]:
    methods = tuple(m.strip() for m in text.split(",") if m.strip())
    unknown = [m for m in methods if m not in SWEEP_METHODS]
    if not methods or unknown:
        raise InvalidParameterError(
            f"unknown sweep method(s) {unknown or text!r}",
            parameter="methods",
            value=text,
            condition="subset of " + ",".join(SWEEP_METHODS),
        )
    return methods  # type: ignore[return-value]


def _cmd_sweep(args: argparse.Namespace, cfg: NetworkConfig) -> list[Row]:
    spec = SweepSpec(
        densities=parse_grid(args.grid),
        c=args.c,
        beta=args.beta,
        receiver=args.receiver,
        methods=_parse_methods(args.methods),
        base=cfg,
        interference_limited=not args.keep_noise,
        n_realizations=args.realizations,
        seed=args.seed,
        workers=args.threads,
    )
    result = run_sweep(spec)
    args.fingerprint = result.fingerprint
    rows = []
    for item in result.rows:
        rows.append(
            {
                "lambda": item.density,
                "n_rx": item.n_rx,
                "receiver": spec.receiver,
                "L": item.cancel,
                "corr": "none",
                "method": item.method,
                "value": item.value,
                "stderr": item.stderr,
                "abs_err": item.abs_err,
                "n": item.n_realizations,
                "seed": item.seed,
                "per_link": item.per_link,
                "error": item.error,
            }
        )
    return rows


def _configure_logging(verbose: bool) -> None:
    if not verbose:
        return
    os.environ[ENV_VAR_LOG] = "1"
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.INFO)


def _emit(frame: pd.DataFrame, out: str | None) -> None:
    text = write_csv(frame, out)
    if out is None:
        sys.stdout.write(text)


def _run_validate(args: argparse.Namespace, cfg: NetworkConfig) -> int:
    results = run_validation(cfg, quick=args.quick)
    for result in results:
        print(f"{'PASS' if result.passed else 'FAIL'}  {result.name}: {result.detail}")
    if args.out:
        frame = pd.DataFrame([vars(r) for r in results])
        write_csv(frame, args.out)
        write_manifest(args.out, command="validate", argv=args.argv, config=cfg, seed=DEFAULT_SEED)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VALIDATION_FAILED


_COMMANDS: dict[str, Callable[[argparse.Namespace, NetworkConfig], list[Row]]] = {
    "simulate": _cmd_simulate,
    "analytic": _cmd_analytic,
    "bounds": _cmd_bounds,
    "sweep": _cmd_sweep,
}


def _dispatch(args: argparse.Namespace, cfg: NetworkConfig) -> int:
    if args.command == "validate":
        return _run_validate(args, cfg)
    rows = _COMMANDS[args.command](args, cfg)
    failed = [row for row in rows if row.get("error")]
    _emit(rows_to_frame(rows), args.out)
    if args.out:
        extra = {"fingerprint": args.fingerprint} if getattr(args, "fingerprint", None) else None
        write_manifest(
            args.out,
            command=args.command,
            argv=args.argv,
            config=cfg,
            seed=getattr(args, "seed", None),
            extra=extra,
        )
    for row in failed:
        print(f"error: {row['method']} at lambda={row['lambda']:g}: {row['error']}", file=sys.stderr)
    return EXIT_NUMERIC if failed else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``rxscaling`` console script.

    Args:
        argv: Arguments without the program name; ``sys.argv[1:]`` when None.

    Returns:
        0 on success, 1 when validation fails, 2 on usage errors, 3 on
        numeric failures.
    """
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(argv)
    try:
        if args.from_manifest:
            manifest = read_manifest(args.from_manifest)
            replay = parser.parse_args(manifest.argv)
            replay.argv = list(manifest.argv)
            replay.out = args.replay_out
            if manifest.seed is not None and hasattr(replay, "seed"):
                replay.seed = manifest.seed
            _configure_logging(args.replay_verbose or replay.verbose)
            return _dispatch(replay, NetworkConfig.model_validate(manifest.config))
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        args.argv = argv
        _configure_logging(args.verbose)
        return _dispatch(args, _resolve_config(args))
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RxScalingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
