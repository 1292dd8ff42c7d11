"""Screen the covariates of a data file and write the rankings."""
import argparse
import logging
import pandas as pd

from .core import default_dn, ScreeningResult
from .methods import MethodSpec, run_method, FUSED
from ..configuration import get_config
from ..data import Dataset, read_csv, RESPONSE_COLUMN
from ..slicing import ResponseKind
from ..utils import exit_codes, int_list, non_negative_int, positive_int, resolve_threads, UsageError

SUBCOMMAND = "screen"
ALIASES = ["kfilter"]
LOGGER_NAME = "kfuse"

RANKING_COLUMNS = ["variable", "method", "statistic", "rank", "selected"]
"""Columns of the ranking file."""


def config_args(parser):
    """Add command line arguments.

    Args:
        parser (argparse.ArgumentParser): the command line parser to which arguments will be added.
    """
    parser.add_argument("--input", dest="input", required=True, metavar="FILENAME", help="CSV data file.")
    parser.add_argument(
        "--response",
        dest="response",
        default=RESPONSE_COLUMN,
        help="Name of the response column, or its 1-based position. Defaults to 'y'.",
    )
    parser.add_argument(
        "--kind",
        dest="kind",
        choices=[k.value for k in ResponseKind],
        default=None,
        help="Response type. Defaults to the sidecar's, or continuous.",
    )
    parser.add_argument(
        "--method",
        dest="methods",
        action="append",
        default=None,
        metavar="METHOD",
        help="fused, kolmogorov:G, sis, rcs or dcs. Repeat to run several methods. Defaults to fused.",
    )
    parser.add_argument(
        "--dn",
        dest="dn",
        type=positive_int,
        default=None,
        help="Number of variables to retain. Defaults to a*ceil(n/ln n), capped at p.",
    )
    parser.add_argument(
        "--slices",
        dest="slices",
        type=int_list,
        default=None,
        metavar="G[,G...]",
        help="Slicing grid of the fused filter, e.g. 3,4,5,6. Defaults to 3..ceil(ln n).",
    )
    parser.add_argument(
        "--out",
        dest="out",
        default="ranking.csv",
        metavar="FILENAME",
        help="Path of the ranking CSV. Defaults to ranking.csv.",
    )
    parser.add_argument(
        "--threads",
        dest="threads",
        type=non_negative_int,
        default=None,
        help="Worker threads, 0 for every core. Overrides KFUSE_THREADS and the configuration.",
    )
    parser.add_argument(
        "--console",
        help="Print the selected sets to the console.",
        action=argparse.BooleanOptionalAction,
        default=True,
    )


def _response_column(value: str, header: list[str]) -> str | int:
    if value in header or not value.isdigit():
        return value
    return int(value) - 1


def ranking_frame(dataset: Dataset, result: ScreeningResult) -> pd.DataFrame:
    """Tabulate a ranking, best variable first.

    Args:
        dataset (Dataset): The screened data set, for covariate names.
        result (ScreeningResult): The ranking.

    Returns:
        pd.DataFrame: One row per variable with the columns of `RANKING_COLUMNS`.
    """
    order = result.ranking
    return pd.DataFrame(
        {
            "variable": [dataset.names[j] for j in order],
            "method": result.method_label,
            "statistic": result.statistics[order],
            "rank": range(1, result.p + 1),
            "selected": [k < result.d_n for k in range(result.p)],
        },
        columns=RANKING_COLUMNS,
    )


def resolve_dn(requested: int | None, n: int, p: int, factor: float) -> int:
    """Number of variables to retain.

    Args:
        requested (int | None): Explicit value, if any.
        n (int): Observations.
        p (int): Covariates.
        factor (float): Constant `a` of the default.

    Raises:
        UsageError: When an explicit value exceeds p.

    Returns:
        int: d_n.
    """
    if requested is not None:
        if requested > p:
            raise UsageError(f"--dn {requested} exceeds the number of variables p={p}")
        return requested
    return min(default_dn(n, factor), p)


@exit_codes
def execute(args=None) -> int:
    """Read the data, screen with every requested method and write the rankings.

    Args:
        args (argparse.Namespace, optional): The command line arguments. Defaults to None.

    Returns:
        int: The return code to provide back to the OS.
    """
    logger = logging.getLogger(__name__)
    config = get_config()

    methods = [MethodSpec.parse(m) for m in (args.methods or [FUSED])]
    threads = resolve_threads(args.threads, config.run.threads)

    header = pd.read_csv(args.input, nrows=0).columns.tolist()
    dataset = read_csv(args.input, response_column=_response_column(args.response, header), response_kind=args.kind)
    d_n = resolve_dn(args.dn, dataset.n, dataset.p, config.screening.dn_factor)
    slices = args.slices if args.slices is not None else config.screening.slices
    for method in methods:
        method.check_applicable(dataset.kind)
        if method.uses_slices:
            try:
                method.grid(dataset.resp, slices, min_slices=config.screening.min_slices)
            except ValueError as e:
                raise UsageError(f"{method}: {e}") from None
    logger.info("screening %d covariates with %s, d_n=%d", dataset.p, ", ".join(map(str, methods)), d_n)

    frames = []
    for method in methods:
        result = run_method(
            method,
            dataset.X,
            dataset.resp,
            d_n,
            slices=slices,
            min_slices=config.screening.min_slices,
            threads=threads,
            block_size=config.run.block_size,
        )
        frames.append(ranking_frame(dataset, result))
        if args.console:
            print(f"{method}: {', '.join(dataset.names[j] for j in result.selected)}")

    pd.concat(frames, ignore_index=True).to_csv(args.out, index=False)
    logger.info("rankings written to %s", args.out)
    return 0
