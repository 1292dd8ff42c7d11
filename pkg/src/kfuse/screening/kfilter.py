"""The fused Kolmogorov filter.

For each covariate the observations are sorted once; every slicing scheme then scans the sorted column while
tracking the empirical CDF of each slice. The largest pairwise gap between slice CDFs at a point is the spread
between the highest and lowest slice CDF there, so a single scan gives the maximum over all slice pairs.
"""
import itertools
import logging
import numba
import numpy as np
import typing

from ..slicing import Response, SliceAssignment, SliceGrid
from ..stats import SortedSample, ks_two_sample_bruteforce
from ..utils import ordered_map
from .core import FilterConfig, ScreeningResult, VariableScore

__logger = None


def _get_logger() -> logging.Logger:
    global __logger
    if __logger is None:
        __logger = logging.getLogger(__name__)
    return __logger


@numba.njit(cache=True, nogil=True)
def _max_spread(order, run_end, labels, sizes):
    """Largest spread between slice CDFs over the run ends of each sorted row of `order`."""
    b, n = order.shape
    k = sizes.shape[0]
    out = np.zeros(b)
    counts = np.zeros(k, dtype=np.int64)
    for j in range(b):
        counts[:] = 0
        best = 0.0
        for i in range(n):
            counts[labels[order[j, i]]] += 1
            if not run_end[j, i]:
                continue
            hi = counts[0] / sizes[0]
            lo = hi
            for s in range(1, k):
                level = counts[s] / sizes[s]
                if level > hi:
                    hi = level
                if level < lo:
                    lo = level
            if hi - lo > best:
                best = hi - lo
        out[j] = best
    return out


class _SortedBlock:
    """A block of columns, sorted once and shared by every slicing scheme."""

    def __init__(self, X: np.ndarray):
        """Class constructor.

        Args:
            X (np.ndarray): An n x b block of covariates.
        """
        columns = np.ascontiguousarray(X.T)
        self.order = np.ascontiguousarray(np.argsort(columns, axis=1, kind="stable"))
        xs = np.take_along_axis(columns, self.order, axis=1)
        # a step function takes its value at x only after the last tied observation
        self.run_end = np.ones(xs.shape, dtype=np.bool_)
        self.run_end[:, :-1] = xs[:, 1:] != xs[:, :-1]

    @property
    def width(self) -> int:
        """Number of columns in the block."""
        return self.order.shape[0]

    def statistic(self, assignment: SliceAssignment) -> np.ndarray:
        """Single-scheme statistic of every column in the block.

        Args:
            assignment (SliceAssignment): The slicing scheme.

        Returns:
            np.ndarray: One statistic per column; zeros when the scheme is degenerate.
        """
        populated = np.flatnonzero(assignment.counts)
        if populated.size < 2:
            return np.zeros(self.width)

        remap = np.full(assignment.G + 1, -1, dtype=np.int64)
        remap[populated + 1] = np.arange(populated.size)
        labels = remap[np.asarray(assignment.H, dtype=np.int64)]
        sizes = np.asarray(assignment.counts, dtype=np.int64)[populated]
        return _max_spread(self.order, self.run_end, labels, sizes)

def _as_column(x: typing.Sequence[float], n: int) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size != n:
        raise ValueError(f"length mismatch: covariate has {x.size} values, slicing covers {n}")
    if np.isnan(x).any():
        raise ValueError("covariate contains NaN values")
    return x[:, None]


def _fuse(per_scheme: np.ndarray) -> np.ndarray:
    # fixed left-to-right order so the sum is identical however columns were blocked
    fused = np.zeros(per_scheme.shape[0])
    for i in range(per_scheme.shape[1]):
        fused = fused + per_scheme[:, i]
    return fused


def khat_single(x: typing.Sequence[float], a: SliceAssignment) -> float:
    """Largest two-sample Kolmogorov-Smirnov statistic between any two slices of one scheme.

    Args:
        x (typing.Sequence[float]): The covariate.
        a (SliceAssignment): The slicing scheme.

    Returns:
        float: The statistic in [0, 1]; 0 when fewer than 2 slices are populated.
    """
    return float(_SortedBlock(_as_column(x, a.n)).statistic(a)[0])


def khat_single_bruteforce(x: typing.Sequence[float], a: SliceAssignment) -> float:
    """Reference implementation of `khat_single`: every slice pair, every sample point.

    Args:
        x (typing.Sequence[float]): The covariate.
        a (SliceAssignment): The slicing scheme.

    Returns:
        float: The statistic in [0, 1].
    """
    x = _as_column(x, a.n)[:, 0]
    samples = [SortedSample.of(x[a.H == g]) for g in range(1, a.G + 1) if a.counts[g - 1] > 0]

    best = 0.0
    for s1, s2 in itertools.combinations(samples, 2):
        best = max(best, ks_two_sample_bruteforce(s1, s2))
    return best


def khat_fused(
    x: typing.Sequence[float], grid: SliceGrid, record_per_scheme: bool = True, index: int = 0
) -> VariableScore:
    """Fused statistic of one covariate: the sum of the single-scheme statistics over the grid.

    Args:
        x (typing.Sequence[float]): The covariate.
        grid (SliceGrid): The slicing schemes.
        record_per_scheme (bool, optional): Keep the single-scheme statistics. Defaults to True.
        index (int, optional): Column index reported in the score. Defaults to 0.

    Returns:
        VariableScore: The score.
    """
    block = _SortedBlock(_as_column(x, grid.n))
    per_scheme = np.column_stack([block.statistic(a) for a in grid])
    fused = _fuse(per_scheme)
    return VariableScore(
        index=index,
        fused=float(fused[0]),
        per_scheme=tuple(float(v) for v in per_scheme[0]) if record_per_scheme else None,
    )


def scheme_statistics(X: np.ndarray, grid: SliceGrid, threads: int = 1, block_size: int = 256) -> np.ndarray:
    """Single-scheme statistics of every column under every scheme of the grid.

    Columns are processed in blocks, possibly on a thread pool; each block writes to its own rows of the result.

    Args:
        X (np.ndarray): The n x p covariate matrix.
        grid (SliceGrid): The slicing schemes.
        threads (int, optional): Worker threads. Defaults to 1.
        block_size (int, optional): Columns per task. Defaults to 256.

    Returns:
        np.ndarray: A p x N matrix of statistics.
    """
    p = X.shape[1]

    def work(start: int) -> np.ndarray:
        block = _SortedBlock(X[:, start : start + block_size])
        return np.column_stack([block.statistic(a) for a in grid])

    starts = list(range(0, p, block_size))
    _get_logger().debug("Screening %d columns in %d blocks on %d threads", p, len(starts), threads)
    return np.vstack(ordered_map(work, starts, threads=threads))


def validate_design(X: np.ndarray, n: int) -> np.ndarray:
    """Check a covariate matrix against the response length.

    Args:
        X (np.ndarray): The covariates.
        n (int): Number of observations in the response.

    Raises:
        ValueError: On a shape mismatch or NaN entries, naming the first offending column.

    Returns:
        np.ndarray: The matrix as a float array.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise ValueError("covariates must form an n x p matrix")
    if X.shape[0] != n:
        raise ValueError(f"covariates have {X.shape[0]} rows, response has {n}")
    bad = np.flatnonzero(np.isnan(X).any(axis=0))
    if bad.size:
        raise ValueError(f"column x{bad[0] + 1} contains NaN values")
    return X


def screen(X: np.ndarray, resp: Response, cfg: FilterConfig) -> ScreeningResult:
    """Rank every covariate by its fused Kolmogorov statistic and retain the top d_n.

    Args:
        X (np.ndarray): The n x p covariate matrix.
        resp (Response): The response. Only its length is used; the slicing lives in `cfg.grid`.
        cfg (FilterConfig): Filter settings.

    Returns:
        ScreeningResult: The ranking, labelled `fused`.
    """
    X = validate_design(X, resp.n)
    if cfg.grid.n != resp.n:
        raise ValueError(f"slicing grid covers {cfg.grid.n} observations, response has {resp.n}")
    if cfg.d_n > X.shape[1]:
        raise ValueError(f"d_n={cfg.d_n} exceeds the number of variables p={X.shape[1]}")

    warnings = []
    for a in cfg.grid:
        if a.is_degenerate:
            message = f"scheme G={a.G} has fewer than 2 nonempty slices and contributes 0 for every variable"
            _get_logger().warning(message)
            warnings.append(message)

    _get_logger().info("Fused filter on n=%d p=%d with slices %s", X.shape[0], X.shape[1], list(cfg.grid.G_list))
    per_scheme = scheme_statistics(X, cfg.grid, threads=cfg.threads, block_size=cfg.block_size)

    return ScreeningResult.from_statistics(
        _fuse(per_scheme),
        d_n=cfg.d_n,
        method_label="fused",
        per_scheme=per_scheme if cfg.record_per_scheme else None,
        G_list=cfg.grid.G_list if cfg.record_per_scheme else None,
        warnings=tuple(warnings),
    )
