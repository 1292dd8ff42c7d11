"""Benchmark screening methods on simulated models."""
import argparse
import logging

from .core import BenchConfig
from .reporting import format_table, write_json
from .runner import run_bench
from ..configuration import get_config
from ..screening import MethodSpec
from ..simgen import ModelId, ModelSpec
from ..utils import exit_codes, int_list, non_negative_int, positive_int, resolve_threads, str_list, UsageError

SUBCOMMAND = "bench"
ALIASES = ["benchmark"]
LOGGER_NAME = "kfuse"

DEFAULT_METHODS = "fused,sis,rcs,dcs"


def config_args(parser):
    """Add command line arguments.

    Args:
        parser (argparse.ArgumentParser): the command line parser to which arguments will be added.
    """
    parser.add_argument(
        "--model",
        dest="models",
        type=str_list,
        required=True,
        metavar="ID[,ID...]",
        help=f"Simulation model(s): {', '.join(m.value for m in ModelId)}.",
    )
    parser.add_argument("--n", dest="n", type=positive_int, default=200, help="Observations. Defaults to 200.")
    parser.add_argument("--p", dest="p", type=positive_int, default=5000, help="Covariates. Defaults to 5000.")
    parser.add_argument(
        "--reps",
        dest="reps",
        type=positive_int,
        default=None,
        help="Replicates. Defaults to bench.replicates from the configuration.",
    )
    parser.add_argument(
        "--methods",
        dest="methods",
        type=str_list,
        default=str_list(DEFAULT_METHODS),
        metavar="METHOD[,METHOD...]",
        help=f"Methods: fused, kolmogorov:G, sis, rcs, dcs. Defaults to {DEFAULT_METHODS}.",
    )
    parser.add_argument(
        "--slices",
        dest="slices",
        type=int_list,
        default=None,
        metavar="G[,G...]",
        help="Slicing grid of the fused filter. Defaults to 3..ceil(ln n).",
    )
    parser.add_argument(
        "--seed",
        dest="seed",
        type=non_negative_int,
        default=None,
        help="Master seed. Defaults to bench.master_seed from the configuration.",
    )
    parser.add_argument("--out", dest="out", default=None, metavar="FILENAME", help="Path of the JSON report.")
    parser.add_argument(
        "--threads",
        dest="threads",
        type=non_negative_int,
        default=None,
        help="Worker threads, 0 for every core. Overrides KFUSE_THREADS and the configuration.",
    )
    parser.add_argument(
        "--timing",
        help="Record runtimes in the JSON report.",
        action=argparse.BooleanOptionalAction,
        default=False,
    )


@exit_codes
def execute(args=None) -> int:
    """Run the benchmarks, print the table and optionally write the JSON report.

    Args:
        args (argparse.Namespace, optional): The command line arguments. Defaults to None.

    Returns:
        int: The return code to provide back to the OS.
    """
    logger = logging.getLogger(__name__)
    config = get_config()

    methods = tuple(MethodSpec.parse(m) for m in args.methods)
    threads = resolve_threads(args.threads, config.run.threads)
    seed = args.seed if args.seed is not None else config.bench.master_seed
    slices = args.slices if args.slices is not None else config.screening.slices

    configs = []
    for model in args.models:
        try:
            configs.append(
                BenchConfig(
                    model=ModelSpec(id=model, n=args.n, p=args.p, seed=seed),
                    methods=methods,
                    replicates=args.reps or config.bench.replicates,
                    bootstrap_resamples=config.bench.bootstrap_resamples,
                    slices=tuple(slices) if slices else None,
                    min_slices=config.screening.min_slices,
                    threads=threads,
                    block_size=config.run.block_size,
                )
            )
        except ValueError as e:
            raise UsageError(str(e)) from None

    reports = [run_bench(cfg) for cfg in configs]
    print(format_table(reports))

    if args.out:
        write_json(args.out, reports, timing=args.timing)
        logger.info("benchmark report written to %s", args.out)
    return 0
