"""Print the population Kolmogorov statistic of a bivariate normal model."""
import logging

from .oracle import kstar_normal, oracle_kg_normal, sample_kg_normal
from ..configuration import get_config
from ..utils import exit_codes, float_list, int_list, non_negative_int, positive_int, UsageError

SUBCOMMAND = "oracle-kg"
ALIASES = ["oracle"]
LOGGER_NAME = "kfuse"


def config_args(parser):
    """Add command line arguments.

    Args:
        parser (argparse.ArgumentParser): the command line parser to which arguments will be added.
    """
    parser.add_argument(
        "--rho",
        dest="rho",
        type=float_list,
        required=True,
        metavar="RHO[,RHO...]",
        help="Correlation(s) between the covariate and the response, |rho| < 1.",
    )
    parser.add_argument(
        "--G",
        dest="G",
        type=int_list,
        required=True,
        metavar="G[,G...]",
        help="Number(s) of equal-probability slices, at least 2.",
    )
    parser.add_argument(
        "--monte-carlo",
        dest="monte_carlo",
        type=positive_int,
        default=None,
        metavar="N",
        help="Also report the sample statistic on N simulated pairs.",
    )
    parser.add_argument(
        "--seed",
        dest="seed",
        type=non_negative_int,
        default=0,
        help="Seed of the Monte Carlo draws. Defaults to 0.",
    )


@exit_codes
def execute(args=None) -> int:
    """Evaluate the oracle on every (rho, G) pair and print one line per pair.

    Args:
        args (argparse.Namespace, optional): The command line arguments. Defaults to None.

    Returns:
        int: The return code to provide back to the OS.
    """
    logger = logging.getLogger(__name__)
    theory = get_config().theory

    for rho in args.rho:
        if not abs(rho) < 1:
            raise UsageError(f"--rho must satisfy |rho| < 1, got {rho}")
    for G in args.G:
        if G < 2:
            raise UsageError(f"--G must be at least 2, got {G}")

    for rho in args.rho:
        for G in args.G:
            value = oracle_kg_normal(rho, G, tol=theory.quadrature_tol, lower=theory.lower_limit)
            line = f"rho={rho:g} G={G} K={value:.10f} K*={kstar_normal(rho):g}"
            if args.monte_carlo:
                sample = sample_kg_normal(rho, G, args.monte_carlo, seed=args.seed)
                line += f" Khat={sample:.6f} n={args.monte_carlo}"
            print(line)
            logger.debug("oracle rho=%g G=%d value=%.12f", rho, G, value)
    return 0
