"""Command-line interface."""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from .core import LorentzBath
from .errors import SteerdynError
from .outputs import run_preset, write_outputs
from .polaron import dephasing_rate, relaxation_rate
from .runs import PRESETS, ScenarioConfig, output_root, parse_config, simulate, sweep
from .types import Knob
from .version import __version__

logger = logging.getLogger(__name__)


def _values(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as err:
        msg = f"invalid value list: {text!r}"
        raise argparse.ArgumentTypeError(msg) from err


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the `steerdyn` command."""
    parser = argparse.ArgumentParser(
        prog="steerdyn",
        description="Controllable decoherence of a dissipative two-level system.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress (-v) or solver details (-vv)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    simulate_cmd = commands.add_parser("simulate", help="run one scenario")
    simulate_cmd.add_argument("--config", required=True, type=Path)
    simulate_cmd.add_argument("--out", type=Path, default=None)

    preset_cmd = commands.add_parser("preset", help="reproduce a figure")
    preset_cmd.add_argument("name", help=f"one of {', '.join(sorted(PRESETS))}")
    preset_cmd.add_argument("--out", type=Path, default=None)
    preset_cmd.add_argument("--workers", type=int, default=None)

    t1_cmd = commands.add_parser("t1", help="relaxation and dephasing times")
    t1_cmd.add_argument("--alpha", type=float, required=True)
    t1_cmd.add_argument("--omega-c", type=float, required=True)
    t1_cmd.add_argument("--epsilon", type=float, required=True)
    t1_cmd.add_argument("--omega0", type=float, required=True)
    t1_cmd.add_argument("--lambda", dest="lam", type=float, required=True)

    sweep_cmd = commands.add_parser("sweep", help="sweep one knob")
    sweep_cmd.add_argument("--config", required=True, type=Path)
    sweep_cmd.add_argument(
        "--knob", required=True, choices=[str(knob) for knob in Knob]
    )
    sweep_cmd.add_argument("--values", required=True, type=_values)
    sweep_cmd.add_argument("--out", type=Path, default=None)
    sweep_cmd.add_argument("--workers", type=int, default=None)

    commands.add_parser("schema", help="print the scenario JSON schema")
    return parser


def _out_dir(args: argparse.Namespace, config: ScenarioConfig | None = None) -> Path:
    if args.out is not None:
        return args.out
    if config is not None and config.out_dir is not None:
        return config.out_dir
    return output_root()


def _run(args: argparse.Namespace) -> None:
    match args.command:
        case "simulate":
            config = parse_config(args.config)
            record = simulate(config)
            write_outputs(record, _out_dir(args, config))
            print(record.run_id)  # noqa: T201
        case "preset":
            record = run_preset(args.name, _out_dir(args), workers=args.workers)
            print(record.run_id)  # noqa: T201
        case "t1":
            bath = LorentzBath(
                alpha=args.alpha, omega_c=args.omega_c, epsilon=args.epsilon
            )
            rate1 = relaxation_rate(bath, args.lam, args.omega0)
            rate2 = dephasing_rate(bath, args.lam, args.omega0)
            print(json.dumps({"T1": 1.0 / rate1, "T2": 1.0 / rate2}))  # noqa: T201
        case "sweep":
            config = parse_config(args.config)
            record = sweep(config, args.knob, args.values, workers=args.workers)
            write_outputs(record, _out_dir(args, config))
            print(record.run_id)  # noqa: T201
        case "schema":
            print(json.dumps(ScenarioConfig.model_json_schema(), indent=2))  # noqa: T201


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the `steerdyn` command.

    Returns
    -------
        Exit status: 0 on success, 1 on a reported error.
    """
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        _run(args)
    except (SteerdynError, ValidationError, OSError, ValueError) as err:
        print(f"steerdyn: error: {err}", file=sys.stderr)  # noqa: T201
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
