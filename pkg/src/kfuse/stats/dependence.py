"""Marginal dependence measures used by the baseline screeners."""
import dcor
import logging
import numba
import numpy as np
import typing

__logger = None


def _get_logger() -> logging.Logger:
    global __logger
    if __logger is None:
        __logger = logging.getLogger(__name__)
    return __logger


def _paired(x: typing.Sequence[float], y: typing.Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or y.ndim != 1 or x.size != y.size:
        raise ValueError(f"length mismatch: {x.size} != {y.size}")
    if x.size < 2:
        raise ValueError("at least 2 observations are required")
    return x, y


def pearson(x: typing.Sequence[float], y: typing.Sequence[float]) -> float:
    """Sample Pearson correlation.

    Args:
        x (typing.Sequence[float]): First variable.
        y (typing.Sequence[float]): Second variable, same length.

    Raises:
        ValueError: When either variable has zero variance.

    Returns:
        float: The correlation, in [-1, 1].
    """
    x, y = _paired(x, y)
    xc = x - x.mean()
    yc = y - y.mean()
    sxx = float(xc @ xc)
    syy = float(yc @ yc)
    if sxx == 0.0 or syy == 0.0:
        raise ValueError("degenerate variable")
    return float(np.clip((xc @ yc) / np.sqrt(sxx * syy), -1.0, 1.0))


@numba.njit(cache=True, nogil=True)
def _count_inversions(values):
    """Count pairs i < j with values[i] > values[j] using a bottom-up merge sort."""
    n = values.shape[0]
    src = values.copy()
    dst = np.empty_like(src)
    swaps = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i = lo
            j = mid
            k = lo
            while i < mid and j < hi:
                if src[j] < src[i]:
                    dst[k] = src[j]
                    swaps += mid - i
                    j += 1
                else:
                    dst[k] = src[i]
                    i += 1
                k += 1
            while i < mid:
                dst[k] = src[i]
                i += 1
                k += 1
            while j < hi:
                dst[k] = src[j]
                j += 1
                k += 1
        src, dst = dst, src
        width *= 2
    return swaps


def _tied_pairs(*columns: np.ndarray) -> int:
    """Number of pairs tied in every one of the given columns."""
    _, counts = np.unique(np.column_stack(columns), axis=0, return_counts=True)
    counts = counts.astype(np.int64)
    return int(np.sum(counts * (counts - 1) // 2))


def kendall_tau(x: typing.Sequence[float], y: typing.Sequence[float]) -> float:
    """Kendall's tau-a by merge-sort inversion counting, O(n log n).

    Pairs tied in either variable count as neither concordant nor discordant, and the denominator is always
    n(n-1)/2.

    Args:
        x (typing.Sequence[float]): First variable.
        y (typing.Sequence[float]): Second variable, same length.

    Returns:
        float: tau-a, in [-1, 1].
    """
    x, y = _paired(x, y)
    n = x.size
    total = n * (n - 1) // 2

    # sorted by x then y, so pairs tied in x never register as inversions in y
    order = np.lexsort((y, x))
    discordant = int(_count_inversions(y[order]))

    tied_x = _tied_pairs(x)
    tied_y = _tied_pairs(y)
    tied_xy = _tied_pairs(x, y)

    score = total - tied_x - tied_y + tied_xy - 2 * discordant
    return score / total


def kendall_tau_bruteforce(x: typing.Sequence[float], y: typing.Sequence[float]) -> float:
    """Kendall's tau-a by enumerating every pair, O(n^2).

    Args:
        x (typing.Sequence[float]): First variable.
        y (typing.Sequence[float]): Second variable, same length.

    Returns:
        float: tau-a, in [-1, 1].
    """
    x, y = _paired(x, y)
    n = x.size
    signs = np.sign(x[:, None] - x[None, :]).astype(np.int64) * np.sign(y[:, None] - y[None, :]).astype(np.int64)
    score = int(np.triu(signs, k=1).sum())
    return score / (n * (n - 1) // 2)


def is_constant(values: np.ndarray) -> bool:
    """Check whether every row (or element) of an array is identical."""
    values = np.asarray(values)
    return bool(values.shape[0] == 0 or np.all(values == values[0]))


def distance_correlation(x: typing.Sequence[float], Y: np.ndarray) -> float:
    """Sample distance correlation between a scalar variable and a (possibly multivariate) response.

    Constant inputs have no defined distance correlation; they score 0 so that screening never aborts on a
    constant column.

    Args:
        x (typing.Sequence[float]): Scalar variable, length n.
        Y (np.ndarray): Response, length n or an n x q matrix.

    Returns:
        float: The distance correlation, in [0, 1].
    """
    x = np.asarray(x, dtype=float)
    Y = np.asarray(Y, dtype=float)
    if Y.ndim == 1:
        Y = Y[:, None]
    if x.ndim != 1 or Y.ndim != 2 or Y.shape[0] != x.size:
        raise ValueError(f"length mismatch: {x.size} != {Y.shape[0]}")
    if x.size < 4:
        raise ValueError("distance correlation requires at least 4 observations")

    if is_constant(x) or is_constant(Y):
        _get_logger().debug("constant input, distance correlation defined as 0")
        return 0.0

    # the univariate fast paths are only valid for a single response column
    method = "auto" if Y.shape[1] == 1 else "naive"
    value = dcor.distance_correlation(x[:, None], Y, method=method)
    return float(np.clip(value, 0.0, 1.0))
