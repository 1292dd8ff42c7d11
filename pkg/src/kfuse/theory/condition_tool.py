"""Check which variables are separated by their marginal signal under a structured covariance."""
import logging

from .condition import condition_c1_set, cs_support_checks, oracle_delta
from .core import CovarianceKind, CovarianceSpec
from ..configuration import get_config
from ..utils import exit_codes, float_list, int_list, positive_int, UsageError

SUBCOMMAND = "c1-check"
ALIASES = ["c1"]
LOGGER_NAME = "kfuse"


def config_args(parser):
    """Add command line arguments.

    Args:
        parser (argparse.ArgumentParser): the command line parser to which arguments will be added.
    """
    parser.add_argument(
        "--cov",
        dest="cov",
        choices=[k.value for k in CovarianceKind],
        default=CovarianceKind.IDENTITY.value,
        help="Covariance family of the covariates. Defaults to identity.",
    )
    parser.add_argument("--rho", dest="rho", type=float, default=0.0, help="Covariance parameter.")
    parser.add_argument(
        "--beta",
        dest="beta",
        type=float_list,
        required=True,
        metavar="B1,B2,...",
        help="Leading coefficients, padded with zeros up to p. `v*k` repeats v k times.",
    )
    parser.add_argument("--p", dest="p", type=positive_int, required=True, help="Number of covariates.")
    parser.add_argument(
        "--G",
        dest="G",
        type=int_list,
        default=None,
        metavar="G[,G...]",
        help="Slice counts; when given, also report the population gap between the set and its complement.",
    )
    parser.add_argument(
        "--noise-sd",
        dest="noise_sd",
        type=float,
        default=1.0,
        help="Standard deviation of the regression noise. Defaults to 1.",
    )


def _one_based(indices) -> str:
    return "{" + ",".join(str(j + 1) for j in indices) + "}"


@exit_codes
def execute(args=None) -> int:
    """Compute alpha = Sigma beta and print the separating set.

    Args:
        args (argparse.Namespace, optional): The command line arguments. Defaults to None.

    Returns:
        int: The return code to provide back to the OS.
    """
    logger = logging.getLogger(__name__)
    theory = get_config().theory

    if len(args.beta) > args.p:
        raise UsageError(f"--beta has {len(args.beta)} entries but --p is {args.p}")
    try:
        sigma = CovarianceSpec(kind=args.cov, rho=args.rho, p=args.p)
    except ValueError as e:
        raise UsageError(str(e)) from None
    beta = list(args.beta) + [0.0] * (args.p - len(args.beta))
    logger.info("checking %s with %d nonzero coefficients", sigma, sum(b != 0 for b in beta))

    result = condition_c1_set(sigma, beta)
    print(f"S={_one_based(result.selected)}")
    print(f"|S|={len(result.selected)}")
    print(f"margin={result.margin:.10g}")
    if sigma.kind is CovarianceKind.AR:
        print(f"bound={result.bound if result.bound is not None else 'n/a'}")
    if sigma.kind is CovarianceKind.CS:
        report = cs_support_checks(sigma, beta)
        print(f"alpha_support={_one_based(report.nonzero_alpha)}")
        print(f"beta_sum={report.beta_sum:.10g}")
        print(f"same_sign={str(report.same_sign).lower()}")
    if args.G:
        delta = oracle_delta(
            sigma,
            beta,
            result.selected,
            args.G,
            noise_sd=args.noise_sd,
            tol=theory.quadrature_tol,
            lower=theory.lower_limit,
        )
        print(f"delta={delta:.10g}")
    return 0
