"""Order statistic primitives: samples, ranks, empirical CDFs and the two-sample Kolmogorov-Smirnov statistic."""
import dataclasses
import numpy as np
import typing


@dataclasses.dataclass(frozen=True)
class SortedSample:
    """A finite sample held in ascending order."""

    values: np.ndarray
    """The observations, non-decreasing."""

    def __post_init__(self):
        """Validate the sample."""
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("empty sample")
        if np.isnan(values).any():
            raise ValueError("sample contains NaN values")
        if np.any(values[1:] < values[:-1]):
            raise ValueError("sample values must be sorted ascending")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        """The sample size."""
        return int(self.values.size)

    @classmethod
    def of(cls, values: typing.Iterable[float]) -> "SortedSample":
        """Sort arbitrary observations into a sample.

        Args:
            values (typing.Iterable[float]): The observations, in any order.

        Returns:
            SortedSample: The sorted sample.
        """
        arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=float)
        if arr.size == 0:
            raise ValueError("empty sample")
        return cls(np.sort(arr, kind="stable"))


@dataclasses.dataclass(frozen=True)
class RankVector:
    """Ranks 1..n assigned by ascending value, ties broken by original position."""

    ranks: np.ndarray
    """Integer ranks, a permutation of 1..n."""

    @property
    def n(self) -> int:
        """Number of ranked observations."""
        return int(self.ranks.size)


def stable_ranks(values: typing.Sequence[float]) -> RankVector:
    """Rank observations, breaking ties by original index.

    Args:
        values (typing.Sequence[float]): The observations.

    Returns:
        RankVector: The ranks.
    """
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValueError("ranks require a one-dimensional vector")
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(arr.size, dtype=np.int64)
    ranks[order] = np.arange(1, arr.size + 1)
    ranks.setflags(write=False)
    return RankVector(ranks)


def empirical_cdf(s: SortedSample, x: float) -> float:
    """Evaluate the right-continuous empirical CDF of `s` at `x`.

    Args:
        s (SortedSample): The sample.
        x (float): Evaluation point.

    Returns:
        float: The fraction of observations less than or equal to `x`.
    """
    if s is None or s.n == 0:
        raise ValueError("empty sample")
    return int(np.searchsorted(s.values, x, side="right")) / s.n


def ks_two_sample(a: SortedSample, b: SortedSample) -> float:
    """Two-sample Kolmogorov-Smirnov statistic, computed with one merged scan.

    Both samples are merged, stably sorted, and the running counts of each sample are accumulated. The two
    empirical CDFs are compared only at the last position of every run of tied values, which is where the step
    functions take their value at that point.

    Args:
        a (SortedSample): The first sample.
        b (SortedSample): The second sample.

    Returns:
        float: sup_x |F_a(x) - F_b(x)|, in [0, 1].
    """
    if a is None or b is None or a.n == 0 or b.n == 0:
        raise ValueError("empty sample")

    merged = np.concatenate((a.values, b.values))
    from_a = np.concatenate((np.ones(a.n, dtype=np.int64), np.zeros(b.n, dtype=np.int64)))
    order = np.argsort(merged, kind="stable")
    merged = merged[order]
    from_a = from_a[order]

    count_a = np.cumsum(from_a)
    count_b = np.arange(1, merged.size + 1) - count_a

    run_end = np.ones(merged.size, dtype=bool)
    run_end[:-1] = merged[1:] != merged[:-1]

    gap = np.abs(count_a[run_end] / a.n - count_b[run_end] / b.n)
    return float(gap.max())


def ks_two_sample_bruteforce(a: SortedSample, b: SortedSample) -> float:
    """Two-sample Kolmogorov-Smirnov statistic by evaluating both CDFs at every sample point.

    Quadratic reference implementation used to validate `ks_two_sample`.

    Args:
        a (SortedSample): The first sample.
        b (SortedSample): The second sample.

    Returns:
        float: sup_x |F_a(x) - F_b(x)|.
    """
    if a is None or b is None or a.n == 0 or b.n == 0:
        raise ValueError("empty sample")

    best = 0.0
    for x in np.concatenate((a.values, b.values)):
        count_a = int(np.sum(a.values <= x))
        count_b = int(np.sum(b.values <= x))
        best = max(best, float(np.abs(np.float64(count_a) / a.n - np.float64(count_b) / b.n)))
    return best


def quantile_rank_thresholds(n: int, G: int) -> np.ndarray:
    """Rank cutoffs placing `n` ranked observations into `G` near-equal slices.

    The cutoffs are c_l = ceil(l * n / G), l = 1..G. An observation with rank r falls into slice l when
    c_{l-1} < r <= c_l, with c_0 = 0.

    Args:
        n (int): Number of observations.
        G (int): Number of slices.

    Returns:
        np.ndarray: Integer cutoffs of length G, the last equal to n.
    """
    if G < 2:
        raise ValueError(f"at least 2 slices are required, got {G}")
    if G > n:
        raise ValueError("more slices than observations")

    levels = np.arange(1, G + 1, dtype=np.int64)
    return -((-levels * n) // G)
