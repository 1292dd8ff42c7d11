"""Replicated screening experiments.

Replicates run on a thread pool. Each replicate draws from its own generator keyed by (master_seed, replicate),
and results are collected by replicate index, so a report does not depend on the number of threads.
"""
import logging
import numpy as np
import time

from .core import BenchConfig, BenchReport, MethodReport
from .metrics import bootstrap_median_se, minimum_model_size
from ..screening import default_dn, run_method, FUSED
from ..simgen import generate
from ..utils import ordered_map, UsageError

__logger = None


def _get_logger() -> logging.Logger:
    global __logger
    if __logger is None:
        __logger = logging.getLogger(__name__)
    return __logger


def run_bench(cfg: BenchConfig) -> BenchReport:
    """Run every method on every replicate and summarize the minimum model sizes.

    Methods that cannot screen the model's response type are skipped with a warning.

    Args:
        cfg (BenchConfig): The experiment.

    Returns:
        BenchReport: Per-method minimum model sizes, medians and bootstrap standard errors.
    """
    start = time.perf_counter()
    kind = cfg.model.id.response_kind

    skipped = {}
    for method in cfg.methods:
        try:
            method.check_applicable(kind)
        except UsageError as e:
            _get_logger().warning("skipping %s on model %s: %s", method, cfg.model.id.value, e)
            skipped[method.label] = str(e)
    active = [m for m in cfg.methods if m.label not in skipped]

    # parallelize replicates when there are several, columns otherwise
    inner_threads = cfg.threads if cfg.replicates == 1 else 1

    def replicate(r: int) -> tuple[list[int], list[float], int]:
        dataset = generate(cfg.model, replicate=r)
        d_n = min(default_dn(dataset.n), dataset.p)
        sizes, seconds = [], []
        for method in active:
            tic = time.perf_counter()
            result = run_method(
                method,
                dataset.X,
                dataset.resp,
                d_n,
                slices=cfg.fused_slices() if method.kind == FUSED else None,
                min_slices=cfg.min_slices,
                threads=inner_threads,
                block_size=cfg.block_size,
            )
            seconds.append(time.perf_counter() - tic)
            sizes.append(minimum_model_size(result.ranking, dataset.truth))
        _get_logger().debug("replicate %d: %s", r, dict(zip((m.label for m in active), sizes)))
        return sizes, seconds, len(dataset.truth)

    _get_logger().info(
        "benchmarking model %s (n=%d, p=%d) over %d replicates on %d threads",
        cfg.model.id.value,
        cfg.model.n,
        cfg.model.p,
        cfg.replicates,
        cfg.threads,
    )
    outcomes = ordered_map(replicate, list(range(cfg.replicates)), threads=cfg.threads)

    reports = []
    for method in cfg.methods:
        if method.label in skipped:
            reports.append(MethodReport(label=method.label, skipped=skipped[method.label]))
            continue
        k = active.index(method)
        mms = tuple(int(sizes[k]) for sizes, _, _ in outcomes)
        reports.append(
            MethodReport(
                label=method.label,
                mms=mms,
                median=float(np.median(mms)),
                se=bootstrap_median_se(mms, resamples=cfg.bootstrap_resamples, seed=cfg.master_seed),
                runtime=float(sum(seconds[k] for _, seconds, _ in outcomes)),
            )
        )

    report = BenchReport(
        model=cfg.model.id.value,
        n=cfg.model.n,
        p=cfg.model.p,
        replicates=cfg.replicates,
        master_seed=cfg.master_seed,
        truth_size=outcomes[0][2],
        methods=tuple(reports),
        runtime=time.perf_counter() - start,
    )
    _get_logger().info("benchmark of model %s finished in %.1f s", report.model, report.runtime)
    return report
