"""Command-line front-end for the homogeneity test, the post-hoc procedure and the experiments."""

import argparse
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from pydantic import ValidationError

from anovats import __app_name__, __version__
from anovats.enumerations import Layout, Subcommand
from anovats.exceptions import AnovatsError, ConfigurationError
from anovats.settings import (
    AppSettings,
    ClusterSettings,
    PowerSettings,
    PreprocessSettings,
    SimulateSettings,
    SizeSettings,
    TestSettings,
    load_settings,
)
from anovats.settings.base import settings
from anovats.settings.cli import CliConfig
from anovats.utils.exceptions import diagnostic, error_handler, initialize_except_hook
from anovats.utils.logging import setup_logging
from app.cli.commands import (
    handle_cluster,
    handle_power,
    handle_preprocess,
    handle_simulate,
    handle_size,
    handle_test,
)

logger = setup_logging(__app_name__, settings.log_level, settings.dev_mode)
"""Logger for the module."""

initialize_except_hook(uncaught_hook=error_handler)

USAGE_EXIT_CODE = 2
DATA_EXIT_CODE = 1

SETTINGS_TYPES: dict[Subcommand, type[AppSettings]] = {
    Subcommand.TEST: TestSettings,
    Subcommand.CLUSTER: ClusterSettings,
    Subcommand.PREPROCESS: PreprocessSettings,
    Subcommand.SIMULATE: SimulateSettings,
    Subcommand.SIZE: SizeSettings,
    Subcommand.POWER: PowerSettings,
}

HANDLERS: dict[Subcommand, Callable[..., str]] = {
    Subcommand.TEST: handle_test,
    Subcommand.PREPROCESS: handle_preprocess,
    Subcommand.SIMULATE: handle_simulate,
    Subcommand.SIZE: handle_size,
    Subcommand.POWER: handle_power,
}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="YAML file with settings; flags take precedence")
    parser.add_argument("--output", type=Path, help="result file (default: stdout)")


def _add_layout(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--layout",
        choices=[layout.value for layout in Layout],
        help="CSV layout: long (area,time[,dim],value) or wide (time column plus one column per area)",
    )


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", type=Path, help="input panel CSV")
    _add_layout(parser)
    parser.add_argument(
        "--max-missing-fraction",
        type=float,
        help="drop areas whose fraction of missing cells exceeds this value",
    )
    parser.add_argument("--from", dest="time_from", help="first time label to keep")
    parser.add_argument("--to", dest="time_to", help="last time label to keep")


def _add_alpha(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, help="significance level in (0, 1) (default: 0.05)")


def _add_block(parser: argparse.ArgumentParser, explicit_b: bool = True) -> None:
    parser.add_argument("--c", type=float, help="block constant in b = floor(c * n^(1/3)) (default: 2.5)")
    if explicit_b:
        parser.add_argument("--b", type=int, help="explicit block length, overrides --c")


def _add_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help="random seed (default: 0)")


def _add_experiment(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--reps", type=int, help="Monte Carlo replications per cell (default: 200)")
    parser.add_argument(
        "--quick",
        action="store_true",
        default=None,
        help="run the reduced grid",
    )


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with one subparser per subcommand."""
    parser = argparse.ArgumentParser(
        prog=__app_name__,
        description="Subsampling homogeneity test for short time-series panels.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    test = subparsers.add_parser("test", help="test the equality of the group means")
    _add_input(test)
    _add_alpha(test)
    _add_block(test)
    _add_common(test)

    cluster = subparsers.add_parser("cluster", help="divide the areas into homogeneous groups")
    _add_input(cluster)
    _add_alpha(cluster)
    _add_block(cluster)
    cluster.add_argument("--format", choices=["text", "json"], default="text", help="output format")
    _add_common(cluster)

    preprocess = subparsers.add_parser(
        "preprocess", help="aggregate a monthly panel into seasons and impute missing quarters"
    )
    _add_input(preprocess)
    _add_common(preprocess)

    simulate = subparsers.add_parser("simulate", help="generate a panel from a simulation process")
    _add_layout(simulate)
    _add_seed(simulate)
    _add_common(simulate)

    size = subparsers.add_parser("size", help="estimate the empirical size over a grid")
    _add_alpha(size)
    _add_seed(size)
    _add_experiment(size)
    _add_common(size)

    power = subparsers.add_parser("power", help="estimate the power of the post-hoc procedure")
    _add_alpha(power)
    _add_block(power, explicit_b=False)
    _add_seed(power)
    _add_experiment(power)
    _add_common(power)

    return parser


def _usage_error(message: str) -> int:
    print(f"error [cli]: {message}", file=sys.stderr)
    return USAGE_EXIT_CODE


def dispatch(config: CliConfig, app: AppSettings) -> str:
    """Run the handler of the configured subcommand and return its stdout text."""
    if config.subcommand is Subcommand.CLUSTER:
        return handle_cluster(app, config.format)  # type: ignore[arg-type]
    return HANDLERS[config.subcommand](app)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line.

    Args:
        argv (Sequence[str], optional): The arguments. Defaults to ``sys.argv[1:]``.

    Returns:
        int: 0 on success, 1 on a data error, 2 on a usage error.

    """
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else USAGE_EXIT_CODE

    try:
        config = CliConfig(**vars(namespace))
    except ValidationError as error:
        first = error.errors()[0]
        option = ".".join(str(part) for part in first["loc"])
        return _usage_error(f"--{option.replace('_', '-')}: {first['msg']}")

    try:
        app = load_settings(SETTINGS_TYPES[config.subcommand], config.config, **config.overrides())
        logger.debug("Settings: %s", app.model_dump(mode="json"))
        stdout = dispatch(config, app)
    except (ConfigurationError, NotImplementedError) as error:
        print(diagnostic(error), file=sys.stderr)
        return USAGE_EXIT_CODE
    except AnovatsError as error:
        print(diagnostic(error), file=sys.stderr)
        return DATA_EXIT_CODE

    sys.stdout.write(stdout)
    sys.stdout.flush()
    return 0


def run() -> None:
    """Console script entry point."""
    sys.exit(main())
