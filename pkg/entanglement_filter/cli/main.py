#!/usr/bin/env python3
"""
ENTANGLEMENT-FILTER CLI - Figure regeneration, point queries and ESD search

COMMANDS:
✅ figure <n>    CSV series behind figure n (1..8)
✅ point         One pipeline point as JSON
✅ sweep-k       Full records over a k grid (noise-free)
✅ sweep-noise   Full records over a Γt grid, for one k or a k list
✅ esd           ESD onset Γt* with its bracket and width

EXIT CODES:
0 success | 1 other domain error | 2 usage/validation error
3 pair never entangled | 4 no death within the horizon

Results go to stdout (or --out); logs go to stderr.
"""

import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd
import structlog
from pydantic import ValidationError

from entanglement_filter import __version__
from entanglement_filter.cli.output import (
    esd_to_json,
    esd_to_text,
    frame_to_csv,
    frame_to_json,
    record_to_json,
    records_to_frame,
    write_text,
)
from entanglement_filter.cli.run_config import (
    Command,
    OutputFormat,
    RunConfig,
    build_run_config,
    resolve_gamma_t_range,
)
from entanglement_filter.config import Settings, get_settings
from entanglement_filter.core.calculators.esd import EsdLocator
from entanglement_filter.core.calculators.figures import build_figure
from entanglement_filter.core.calculators.sweeps import (
    evaluate_point,
    gamma_t_grid,
    k_grid,
    sweep_filter,
    sweep_noise_filter,
)
from entanglement_filter.exceptions import (
    EntanglementFilterError,
    InvalidRunConfigError,
    NeverEntangledError,
    NoDeathFoundError,
)
from entanglement_filter.logging_config import configure_logging

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2
EXIT_NEVER_ENTANGLED = 3
EXIT_NO_DEATH = 4

# argparse dest -> RunConfig field
_FLAG_FIELDS = (
    "figure",
    "state",
    "k",
    "k_list",
    "gamma_t",
    "gamma_t_min",
    "gamma_t_max",
    "points",
    "pair",
    "target_qubit",
    "noisy_qubits",
    "tol",
    "output_path",
    "format",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entanglement-filter",
        description="Local filtering and depolarizing noise on 3-qubit W, GHZ and W-Wbar states",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--state", help="W3, GHZ3 or WWbar3 (default W3)")
    common.add_argument("--k", type=float, help="Filtering parameter in [0, 1]")
    common.add_argument("--k-list", dest="k_list", help="Comma-separated k values")
    common.add_argument("--gamma-t", dest="gamma_t", type=float, help="Noise time for point")
    common.add_argument("--gamma-t-min", dest="gamma_t_min", type=float)
    common.add_argument("--gamma-t-max", dest="gamma_t_max", type=float)
    common.add_argument("--points", type=int, help="Grid size")
    common.add_argument("--pair", help="12, 13 or 23 (default 23)")
    common.add_argument("--target-qubit", dest="target_qubit", type=int)
    common.add_argument("--noisy-qubits", dest="noisy_qubits", help="e.g. 2,3")
    common.add_argument("--tol", type=float, help="ESD bracket width")
    common.add_argument("--out", dest="output_path", help="Output file (default stdout)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat])
    common.add_argument("--config", type=Path, help="key=value file of defaults")
    common.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING, ...")

    sub = parser.add_subparsers(dest="command", required=True)
    figure = sub.add_parser(Command.FIGURE.value, parents=[common], help="Regenerate a figure")
    figure.add_argument("figure", type=int, help="Figure number 1..8")
    sub.add_parser(Command.POINT.value, parents=[common], help="Evaluate one point")
    sub.add_parser(Command.SWEEP_K.value, parents=[common], help="Sweep the filter parameter")
    sub.add_parser(Command.SWEEP_NOISE.value, parents=[common], help="Sweep the noise time")
    sub.add_parser(Command.ESD.value, parents=[common], help="Locate the ESD onset")
    return parser


def _emit_frame(frame: pd.DataFrame, config: RunConfig, settings: Settings) -> None:
    digits = settings.csv_significant_digits
    if config.format is OutputFormat.JSON:
        text = frame_to_json(frame, digits)
    else:
        text = frame_to_csv(frame, digits)
    write_text(text, config.output_path)


def cmd_figure(config: RunConfig, settings: Settings) -> int:
    """Write the series of one figure"""
    assert config.figure is not None
    frame = build_figure(
        config.figure,
        k_values=config.k_list,
        gamma_t_max=config.gamma_t_max,
        points=config.points,
        settings=settings,
    )
    _emit_frame(frame, config, settings)
    return EXIT_OK


def cmd_point(config: RunConfig, settings: Settings) -> int:
    """Print one SweepRecord as JSON"""
    record = evaluate_point(
        config.state,
        config.k,
        config.gamma_t,
        target_qubit=config.target_qubit,
        noisy_qubits=config.noisy_qubits,
    )
    write_text(record_to_json(record), config.output_path)
    return EXIT_OK


def cmd_sweep_k(config: RunConfig, settings: Settings) -> int:
    ks = config.k_list or k_grid(config.points or settings.k_points)
    records = sweep_filter(
        config.state, ks, target_qubit=config.target_qubit, max_workers=settings.max_workers
    )
    _emit_frame(records_to_frame(records), config, settings)
    return EXIT_OK


def cmd_sweep_noise(config: RunConfig, settings: Settings) -> int:
    gamma_t_min, gamma_t_max, points = resolve_gamma_t_range(
        config, settings.gamma_t_max, settings.gamma_t_points
    )
    times = gamma_t_grid(gamma_t_max, points, gamma_t_min)
    records = []
    for k in config.k_list or [config.k]:
        records.extend(
            sweep_noise_filter(
                config.state,
                k,
                times,
                target_qubit=config.target_qubit,
                noisy_qubits=config.noisy_qubits,
                max_workers=settings.max_workers,
            )
        )
    _emit_frame(records_to_frame(records), config, settings)
    return EXIT_OK


def cmd_esd(config: RunConfig, settings: Settings) -> int:
    """Print the onset, its bracket and the width achieved"""
    result = EsdLocator(settings=settings).locate(
        config.state,
        config.k,
        config.pair,
        config.tol,
        target_qubit=config.target_qubit,
        noisy_qubits=config.noisy_qubits,
    )
    if config.format is OutputFormat.JSON:
        text = esd_to_json(result)
    else:
        text = esd_to_text(result, settings.csv_significant_digits)
    write_text(text, config.output_path)
    return EXIT_OK


COMMANDS = {
    Command.FIGURE: cmd_figure,
    Command.POINT: cmd_point,
    Command.SWEEP_K: cmd_sweep_k,
    Command.SWEEP_NOISE: cmd_sweep_noise,
    Command.ESD: cmd_esd,
}


def _describe_validation_error(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        field = ".".join(str(loc) for loc in error["loc"]) or "config"
        parts.append(f"{field}: {error['msg']}")
    return "; ".join(parts)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    settings = get_settings()
    flags: Dict[str, object] = {name: getattr(args, name, None) for name in _FLAG_FIELDS}
    try:
        configure_logging(args.log_level or settings.log_level, settings.log_json)
        config = build_run_config(args.command, flags, args.config)
    except ValidationError as exc:
        print(f"invalid arguments: {_describe_validation_error(exc)}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    logger.info("dispatch", command=config.command.value, state=config.state.value)
    try:
        return COMMANDS[config.command](config, settings)
    except NeverEntangledError as exc:
        print(f"never entangled: {exc}", file=sys.stderr)
        return EXIT_NEVER_ENTANGLED
    except NoDeathFoundError as exc:
        print(f"{exc}", file=sys.stderr)
        return EXIT_NO_DEATH
    except InvalidRunConfigError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except EntanglementFilterError as exc:
        # past validation, contract violations come from the numerics
        logger.warning("domain_error", error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
