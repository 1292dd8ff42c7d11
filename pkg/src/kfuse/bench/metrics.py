"""Screening accuracy metrics."""
import numpy as np
import typing

from ..simgen import make_rng


def minimum_model_size(ranking: typing.Sequence[int], truth: typing.Iterable[int]) -> int:
    """Smallest k such that the first k ranked variables contain every active variable.

    Args:
        ranking (typing.Sequence[int]): Variable indices, best first.
        truth (typing.Iterable[int]): Indices of the active variables.

    Raises:
        ValueError: When the active set is empty or not covered by the ranking.

    Returns:
        int: The largest rank position (1-based) of an active variable.
    """
    truth = set(int(j) for j in truth)
    if not truth:
        raise ValueError("active set is empty")

    position = {int(j): k for k, j in enumerate(ranking, start=1)}
    missing = truth.difference(position)
    if missing:
        raise ValueError(f"active variables {sorted(missing)} are not ranked")
    return max(position[j] for j in truth)


def bootstrap_median_se(values: typing.Sequence[float], resamples: int = 1000, seed: int = 0) -> float:
    """Bootstrap standard error of the sample median.

    Args:
        values (typing.Sequence[float]): The sample.
        resamples (int, optional): Number of bootstrap resamples. Defaults to 1000.
        seed (int, optional): Seed of the resampling. Defaults to 0.

    Returns:
        float: Standard deviation of the resampled medians; 0 for a single value.
    """
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise ValueError("empty sample")
    if values.size == 1:
        return 0.0

    index = make_rng(seed).integers(0, values.size, size=(resamples, values.size))
    return float(np.std(np.median(values[index], axis=1), ddof=1)) if resamples > 1 else 0.0
