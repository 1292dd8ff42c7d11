"""Baseline marginal screeners sharing the `ScreeningResult` contract."""
import enum
import logging
import numpy as np
import typing

from ..slicing import Response, ResponseKind
from ..stats import distance_correlation, is_constant, kendall_tau
from ..utils import ordered_map
from .core import ScreeningResult
from .kfilter import validate_design


class BaselineMethod(enum.Enum):
    """Marginal screening baselines."""

    SIS = "sis"
    """Absolute Pearson correlation."""
    RCS = "rcs"
    """Absolute Kendall rank correlation."""
    DCS = "dcs"
    """Distance correlation."""

    @classmethod
    def _missing_(cls, value: typing.Any) -> typing.Any:
        if isinstance(value, str):
            for member in cls:
                if member.value == value.lower():
                    return member

        return super()._missing_(value)


def _continuous_response(y: typing.Sequence[float] | Response, method: BaselineMethod) -> np.ndarray:
    if isinstance(y, Response):
        if y.kind is not ResponseKind.CONTINUOUS:
            raise ValueError(f"{method.value} requires continuous response")
        y = y.values
    y = np.asarray(y, dtype=float)
    if y.ndim != 1:
        raise ValueError("response must be a one-dimensional vector")
    return y


def _columnwise(
    X: np.ndarray, measure: typing.Callable[[np.ndarray], float], threads: int, block_size: int
) -> np.ndarray:
    def work(start: int) -> np.ndarray:
        return np.array([measure(X[:, j]) for j in range(start, min(start + block_size, X.shape[1]))])

    return np.concatenate(ordered_map(work, list(range(0, X.shape[1], block_size)), threads=threads))


def sis_screen(X: np.ndarray, y: typing.Sequence[float] | Response, d_n: int) -> ScreeningResult:
    """Sure independence screening: rank by absolute Pearson correlation with the response.

    Constant columns score 0.

    Args:
        X (np.ndarray): The n x p covariate matrix.
        y (typing.Sequence[float] | Response): Continuous response.
        d_n (int): Number of variables to retain.

    Returns:
        ScreeningResult: The ranking, labelled `sis`.
    """
    y = _continuous_response(y, BaselineMethod.SIS)
    X = validate_design(X, y.size)

    yc = y - y.mean()
    syy = float(yc @ yc)
    if syy == 0.0:
        raise ValueError("degenerate variable")

    Xc = X - X.mean(axis=0)
    sxx = np.einsum("ij,ij->j", Xc, Xc)
    cross = Xc.T @ yc

    statistics = np.zeros(X.shape[1])
    live = sxx > 0
    statistics[live] = np.minimum(np.abs(cross[live]) / np.sqrt(sxx[live] * syy), 1.0)

    warnings = _constant_warning(int(np.count_nonzero(~live)))
    return ScreeningResult.from_statistics(statistics, d_n=d_n, method_label="sis", warnings=warnings)


def rcs_screen(
    X: np.ndarray, y: typing.Sequence[float] | Response, d_n: int, threads: int = 1, block_size: int = 256
) -> ScreeningResult:
    """Rank correlation screening: rank by absolute Kendall tau with the response.

    Args:
        X (np.ndarray): The n x p covariate matrix.
        y (typing.Sequence[float] | Response): Continuous response.
        d_n (int): Number of variables to retain.
        threads (int, optional): Worker threads. Defaults to 1.
        block_size (int, optional): Columns per task. Defaults to 256.

    Returns:
        ScreeningResult: The ranking, labelled `rcs`.
    """
    y = _continuous_response(y, BaselineMethod.RCS)
    X = validate_design(X, y.size)

    statistics = _columnwise(X, lambda x: abs(kendall_tau(x, y)), threads, block_size)
    return ScreeningResult.from_statistics(statistics, d_n=d_n, method_label="rcs")


def dcs_screen(X: np.ndarray, resp: Response, d_n: int, threads: int = 1, block_size: int = 256) -> ScreeningResult:
    """Distance correlation screening.

    Continuous and count responses are used as a real vector; a categorical response is expanded to its
    n x levels indicator matrix.

    Args:
        X (np.ndarray): The n x p covariate matrix.
        resp (Response): The response.
        d_n (int): Number of variables to retain.
        threads (int, optional): Worker threads. Defaults to 1.
        block_size (int, optional): Columns per task. Defaults to 256.

    Returns:
        ScreeningResult: The ranking, labelled `dcs`.
    """
    if not isinstance(resp, Response):
        resp = Response(kind=ResponseKind.CONTINUOUS, values=resp)
    X = validate_design(X, resp.n)

    if resp.kind is ResponseKind.CATEGORICAL:
        Y = resp.indicator_matrix()
    else:
        Y = resp.values.astype(float)

    statistics = _columnwise(X, lambda x: distance_correlation(x, Y), threads, block_size)
    constant = sum(1 for j in range(X.shape[1]) if is_constant(X[:, j]))
    return ScreeningResult.from_statistics(
        statistics, d_n=d_n, method_label="dcs", warnings=_constant_warning(constant)
    )


def _constant_warning(count: int) -> tuple[str, ...]:
    if not count:
        return ()
    message = f"{count} constant column(s) scored 0"
    logging.getLogger(__name__).warning(message)
    return (message,)
