"""Generators of the simulation models.

Each variant of a model family draws the same random numbers in the same order, so for a fixed seed the
variants differ only by the monotone transformation applied afterwards.
"""
import logging
import math
import numpy as np
import typing

from .core import ModelId, ModelSpec
from .rng import draw, make_rng
from ..data import Dataset
from ..slicing import Response

POISSON_LOG_MEAN_CAP = 40.0
"""Largest log-mean passed to the Poisson sampler."""

CATEGORIES = 5
"""Number of classes of the classification model."""


def cs_gaussian(rng: np.random.Generator, n: int, p: int, rho: float) -> np.ndarray:
    """Draw n rows of N(0, CS(rho)) as W_j = sqrt(rho) Z_0 + sqrt(1 - rho) Z_j.

    Args:
        rng (np.random.Generator): The generator.
        n (int): Rows.
        p (int): Columns.
        rho (float): Common correlation in [0, 1).

    Returns:
        np.ndarray: n x p draws.
    """
    shared = draw(rng, "normal", (n, 1))
    own = draw(rng, "normal", (n, p))
    return math.sqrt(rho) * shared + math.sqrt(1.0 - rho) * own


def ar_gaussian(rng: np.random.Generator, n: int, p: int, rho: float) -> np.ndarray:
    """Draw n rows of N(0, AR(rho)) with W_1 = Z_1, W_j = rho W_{j-1} + sqrt(1 - rho^2) Z_j.

    Args:
        rng (np.random.Generator): The generator.
        n (int): Rows.
        p (int): Columns.
        rho (float): Lag-one correlation, |rho| < 1.

    Returns:
        np.ndarray: n x p draws.
    """
    Z = draw(rng, "normal", (n, p))
    W = np.empty_like(Z)
    W[:, 0] = Z[:, 0]
    scale = math.sqrt(1.0 - rho * rho)
    for j in range(1, p):
        W[:, j] = rho * W[:, j - 1] + scale * Z[:, j]
    return W


def _padded(leading: typing.Sequence[float], p: int) -> np.ndarray:
    beta = np.zeros(p)
    beta[: len(leading)] = leading
    return beta


def _model1(spec: ModelSpec, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
    W = cs_gaussian(rng, spec.n, spec.p, 0.7)
    eps = draw(rng, "normal", spec.n)
    linear = W @ _padded([2.8, -2.8], spec.p) + eps
    if spec.id is ModelId.M1B:
        return W**9, linear, (0, 1)
    if spec.id is ModelId.M1C:
        return W, linear**9, (0, 1)
    return W, linear, (0, 1)


def _model2(spec: ModelSpec, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
    W = ar_gaussian(rng, spec.n, spec.p, 0.7)
    eps = draw(rng, "normal", spec.n)
    linear = W @ _padded([0.8] * 10, spec.p) + eps
    truth = tuple(range(10))
    if spec.id is ModelId.M2B:
        return np.exp(2.0 * W), linear, truth
    if spec.id is ModelId.M2C:
        return W, np.exp(linear), truth
    return W, linear, truth


def _model3(spec: ModelSpec, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
    X = draw(rng, "cauchy", (spec.n, spec.p))
    eps = draw(rng, "normal", spec.n)
    return X, (X[:, 0] + X[:, 1] + 1.0) ** 3 + eps, (0, 1)


def _model4(spec: ModelSpec, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
    X = draw(rng, "uniform", (spec.n, spec.p))
    eps = draw(rng, "normal", spec.n)
    y = 4.0 * X[:, 0] + 2.0 * np.tan(np.pi * X[:, 1] / 2.0) + 5.0 * X[:, 2] ** 2 + eps
    return X, y, (0, 1, 2)


def _model5(spec: ModelSpec, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
    X = ar_gaussian(rng, spec.n, spec.p, 0.8)
    eps = draw(rng, "normal", spec.n)
    mean = 2.0 * (X[:, :5] @ np.array([1.0, 0.8, 0.6, 0.4, 0.2]))
    y = mean + np.exp(X[:, 19] + X[:, 20] + X[:, 21]) * eps
    return X, y, (0, 1, 2, 3, 4, 19, 20, 21)


def _model6(spec: ModelSpec, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
    X = draw(rng, "t2", (spec.n, spec.p))
    log_mean = 0.8 * X[:, 0] - 0.8 * X[:, 1]
    capped = np.count_nonzero(log_mean > POISSON_LOG_MEAN_CAP)
    if capped:
        logging.getLogger(__name__).warning(
            "capped %d poisson log-means at %g (seed=%d)", capped, POISSON_LOG_MEAN_CAP, spec.seed
        )
    y = draw(rng, "poisson", spec.n, mu=np.exp(np.minimum(log_mean, POISSON_LOG_MEAN_CAP)))
    return X, y, (0, 1)


def _model7(spec: ModelSpec, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
    y = rng.integers(1, CATEGORIES + 1, size=spec.n)
    X = draw(rng, "cauchy", (spec.n, spec.p))
    signal = draw(rng, "mixture", (spec.n, 2 * CATEGORIES))
    for g in range(1, CATEGORIES + 1):
        rows = y == g
        columns = [2 * (g - 1), 2 * g - 1]
        X[np.ix_(rows, columns)] = signal[np.ix_(rows, columns)]
    return X, y, tuple(range(2 * CATEGORIES))


_GENERATORS = {
    "1": _model1,
    "2": _model2,
    "3": _model3,
    "4": _model4,
    "5": _model5,
    "6": _model6,
    "7": _model7,
}


def generate(spec: ModelSpec, replicate: typing.Optional[int] = None) -> Dataset:
    """Simulate a data set.

    The result is a pure function of the model parameters and the replicate index.

    Args:
        spec (ModelSpec): The model, its size and seed.
        replicate (typing.Optional[int], optional): Replicate index mixed into the seed. Defaults to None.

    Returns:
        Dataset: The simulated data with its active set.
    """
    rng = make_rng(spec.seed, replicate)
    X, y, truth = _GENERATORS[spec.id.value[0]](spec, rng)
    kind = spec.id.response_kind
    resp = Response(kind=kind, values=y, levels=CATEGORIES if spec.id is ModelId.M7 else None)
    return Dataset(X=X, resp=resp, truth=truth, label=spec.id.value)
