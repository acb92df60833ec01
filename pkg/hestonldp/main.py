import argparse
import logging
import logging.config
import math
import os
import pathlib
import sys
from typing import Any, Dict, List, Optional

import orjson
import yaml
from pydantic import ValidationError

from hestonldp.asymptotics import InvalidConfiguration, OutOfTheoremRange
from hestonldp.commands import (
    OutputFormat,
    OutputSpec,
    RunConfig,
    cmd_domain,
    cmd_rate,
    cmd_selftest,
    cmd_verify,
    parse_t_grid,
    parse_x_grid,
    write_result
)
from hestonldp.exceptions import ConfigurationError
from hestonldp.model import REFERENCE_PARAMS, ParameterError, load_params, validate_params
from hestonldp.montecarlo import (
    BudgetExceeded,
    Direction,
    GateRefused,
    LimitMethod,
    Measure,
    Perturbation,
    Scheme
)
from hestonldp.settings import MONTECARLO_SETTINGS



_LOGGER = logging.getLogger("hestonldp.main")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_LOGGING_CONFIG = pathlib.Path(__file__).parent.joinpath("logging.yml")

PARAM_NAMES = ("kappa", "theta", "sigma", "rho", "y0", "x0")

_CONFIG_ERRORS = (
    ValidationError,
    ConfigurationError,
    ParameterError,
    InvalidConfiguration,
    OutOfTheoremRange,
    GateRefused,
    BudgetExceeded,
)


def setup_logging(verbose: bool = False) -> None:
    """Configure logging from LOGGING_CONFIG_PATH or the bundled logging.yml."""
    path = pathlib.Path(os.getenv("LOGGING_CONFIG_PATH", DEFAULT_LOGGING_CONFIG))
    try:
        config = yaml.safe_load(path.read_text())
        logging.config.dictConfig(config)
    except (OSError, ValueError, yaml.YAMLError):
        logging.basicConfig(level=logging.WARNING)
        _LOGGER.warning("Unable to load logging config from %s", path, exc_info=True)
    if verbose:
        for name in list(logging.root.manager.loggerDict):
            if name == "hestonldp" or name.startswith("hestonldp."):
                logging.getLogger(name).setLevel(logging.DEBUG)
        logging.getLogger("hestonldp").setLevel(logging.DEBUG)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid float value: '{text}'")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite, got '{text}'")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", help="JSON file with kappa, theta, sigma, rho, y0, x0")
    for name in PARAM_NAMES:
        common.add_argument(f"--{name}", type=_finite_float, help=f"Override {name} from the params file")
    common.add_argument("--out", help="Output path, stdout if omitted")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--force", action="store_true", help="Evaluate limits outside their proven range")
    common.add_argument("--verbose", action="store_true")
    common.add_argument(
        "--workers",
        type=_positive_int,
        default=None,
        help="Simulation threads; results do not depend on it"
    )

    parser = argparse.ArgumentParser(
        prog="hestonldp",
        description="Large deviations of the Heston log-spot: rate functions, smoothness and Monte Carlo checks."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    domain = subparsers.add_parser("domain", parents=[common], help="Domain and smoothness report")
    domain.add_argument("--lam", type=_finite_float, default=1.0, help="Rate of the exponential perturbation")

    rate = subparsers.add_parser("rate", parents=[common], help="Rate function table")
    rate.add_argument("--x-grid", default="-1:1:41", help="start:stop:num or a comma separated list")

    verify = subparsers.add_parser("verify", parents=[common], help="Monte Carlo verification of a tail limit")
    verify.add_argument("--x", type=_finite_float, required=True)
    verify.add_argument("--measure", choices=[m.value for m in Measure], default=Measure.PRICING.value)
    verify.add_argument("--perturb", default="+exp:1", help="none, +exp:LAMBDA or -exp:LAMBDA")
    verify.add_argument("--direction", choices=[d.value for d in Direction], default=Direction.BELOW.value)
    verify.add_argument("--t", default="25,50,100", help="Comma separated increasing horizons")
    verify.add_argument("--paths", type=_positive_int, default=200_000)
    verify.add_argument("--steps-per-unit-time", type=_positive_int, default=MONTECARLO_SETTINGS.steps_per_unit_time)
    verify.add_argument("--tol", type=_finite_float, default=0.05)
    verify.add_argument("--scheme", choices=[s.value for s in Scheme], default=Scheme.FULL_TRUNCATION_EULER.value)
    verify.add_argument(
        "--via",
        choices=["theorem", "gartner-ellis"],
        default="theorem",
        help="Source of the theoretical limit"
    )

    selftest = subparsers.add_parser("selftest", parents=[common], help="Run the invariant suite")
    selftest.add_argument("--paths", type=_positive_int, default=100_000)
    selftest.add_argument("--coupled", action="store_true", help="Couple the exponentials of the ordering check")
    return parser


def resolve_params(args: argparse.Namespace) -> Dict[str, Any]:
    """Parameters from --params, or the reference set, with flag overrides."""
    if args.params is not None:
        with open(args.params, "rb") as fh:
            data = orjson.loads(fh.read())
        if not isinstance(data, dict):
            raise ConfigurationError(f"Expected a JSON object in {args.params}")
    else:
        data = REFERENCE_PARAMS.dict()
    for name in PARAM_NAMES:
        value = getattr(args, name)
        if value is not None:
            data[name] = value
    return data


def resolve_options(args: argparse.Namespace) -> Dict[str, Any]:
    if args.command == "domain":
        if not args.lam > 0:
            raise ConfigurationError(f"--lam must be positive, got {args.lam}")
        return {"lam": args.lam}
    if args.command == "rate":
        return {"x_grid": parse_x_grid(args.x_grid)}
    if args.command == "verify":
        return {
            "x": args.x,
            "measure": args.measure,
            "perturbation": str(Perturbation.parse(args.perturb)),
            "direction": args.direction,
            "t_grid": parse_t_grid(args.t),
            "n_paths": args.paths,
            "steps_per_unit_time": args.steps_per_unit_time,
            "tol": args.tol,
            "scheme": args.scheme,
            "via": LimitMethod(args.via.replace("-", "_")).value,
        }
    return {"n_paths": args.paths, "coupled": args.coupled}


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Build the run configuration from command-line arguments.

    Raises:
        ConfigurationError: The params file or an option cannot be used.
        ValidationError: A value has the wrong type or shape.
        ParameterError: The parameters violate the model constraints.
    """
    try:
        data = resolve_params(args)
    except (OSError, orjson.JSONDecodeError) as e:
        raise ConfigurationError(f"Unable to read parameters: {e}") from e
    params = validate_params(data)
    try:
        options = resolve_options(args)
    except ValueError as e:
        if isinstance(e, ValidationError):
            raise
        raise ConfigurationError(str(e)) from e
    return RunConfig(
        command=args.command,
        params=params,
        seed=args.seed,
        force=args.force,
        options=options,
        output=OutputSpec(path=args.out, format=OutputFormat(args.format))
    )


def execute(config: RunConfig, workers: Optional[int] = None) -> int:
    if config.command == "domain":
        result = cmd_domain(config)
    elif config.command == "rate":
        result = cmd_rate(config, config.options["x_grid"])
    elif config.command == "verify":
        result = cmd_verify(config, runner=MONTECARLO_SETTINGS.get_runner(workers))
    else:
        result = cmd_selftest(config, runner=MONTECARLO_SETTINGS.get_runner(workers))
    write_result(config, result)
    return result.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    setup_logging(args.verbose)
    try:
        config = resolve_config(args)
        return execute(config, args.workers)
    except _CONFIG_ERRORS as e:
        print(f"hestonldp: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
