"""Simulate a data set and write it as CSV with its JSON sidecar."""
import logging

from .core import ModelId, ModelSpec
from .models import generate
from ..data import sidecar_path, write_csv
from ..utils import exit_codes, non_negative_int, positive_int, UsageError

SUBCOMMAND = "simulate"
ALIASES = ["sim"]
LOGGER_NAME = "kfuse"


def config_args(parser):
    """Add command line arguments.

    Args:
        parser (argparse.ArgumentParser): the command line parser to which arguments will be added.
    """
    parser.add_argument(
        "--model",
        dest="model",
        required=True,
        choices=[m.value for m in ModelId],
        help="Simulation model.",
    )
    parser.add_argument("--n", dest="n", type=positive_int, default=200, help="Observations. Defaults to 200.")
    parser.add_argument("--p", dest="p", type=positive_int, default=5000, help="Covariates. Defaults to 5000.")
    parser.add_argument("--seed", dest="seed", type=non_negative_int, default=0, help="Seed. Defaults to 0.")
    parser.add_argument(
        "--replicate",
        dest="replicate",
        type=non_negative_int,
        default=None,
        help="Replicate index; reproduces the data set of that replicate in a benchmark with the same seed.",
    )
    parser.add_argument(
        "--out",
        dest="out",
        default="data.csv",
        metavar="FILENAME",
        help="Path of the CSV file. The sidecar is written next to it with a .json suffix. Defaults to data.csv.",
    )


@exit_codes
def execute(args=None) -> int:
    """Generate the data set and write it.

    Args:
        args (argparse.Namespace, optional): The command line arguments. Defaults to None.

    Returns:
        int: The return code to provide back to the OS.
    """
    logger = logging.getLogger(__name__)

    try:
        spec = ModelSpec(id=args.model, n=args.n, p=args.p, seed=args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from None

    dataset = generate(spec, replicate=args.replicate)
    write_csv(args.out, dataset, seed=args.seed, replicate=args.replicate)
    logger.info("model %s written to %s and %s", spec.id.value, args.out, sidecar_path(args.out))
    return 0
