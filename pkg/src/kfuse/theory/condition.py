"""Marginal signal diagnostics of the transformation linear model.

Under Y = X'beta + eps with X ~ N(0, Sigma), the marginal correlation of X_j with Y is proportional to
alpha_j, where alpha = Sigma beta. Since the population Kolmogorov statistic is monotone in |alpha_j|, a set S
is separated from its complement exactly when min over S of |alpha| exceeds max outside S.
"""
import dataclasses
import logging
import math
import numpy as np
import scipy.signal
import typing

from ..stats import DEFAULT_TOL
from .core import CovarianceKind, CovarianceSpec
from .oracle import LOWER_LIMIT, oracle_kg_normal

# relative size below which an alpha entry is treated as zero
ZERO_TOL = 1.0e-12


@dataclasses.dataclass(frozen=True, kw_only=True)
class C1Result:
    """A set of variables separated from the rest by |alpha|."""

    selected: tuple[int, ...]
    """Zero-based indices of the separating set, ascending."""
    margin: float
    """min over the set of |alpha| minus max outside it."""
    alpha: np.ndarray
    """The vector Sigma beta."""
    support: tuple[int, ...]
    """Zero-based indices where beta is nonzero."""
    bound: typing.Optional[int] = None
    """Analytic upper bound on the size of the set, autoregressive covariance only."""


@dataclasses.dataclass(frozen=True, kw_only=True)
class CsSupportReport:
    """Compound symmetry support diagnostics."""

    nonzero_alpha: tuple[int, ...]
    """Zero-based indices with alpha_j != 0."""
    beta_sum: float
    """The sum of the coefficients."""
    exact_support: bool
    """Whether alpha is nonzero exactly where beta is nonzero."""
    same_sign: bool
    """Whether rho > 0 and the nonzero coefficients share one sign."""


def _check_beta(sigma: CovarianceSpec, beta: typing.Sequence[float]) -> np.ndarray:
    beta = np.asarray(beta, dtype=float)
    if beta.ndim != 1 or beta.size != sigma.p:
        raise ValueError(f"beta has {beta.size} entries, expected p={sigma.p}")
    if not np.all(np.isfinite(beta)):
        raise ValueError("beta contains non-finite values")
    return beta


def _is_zero(alpha: np.ndarray) -> np.ndarray:
    return np.abs(alpha) <= ZERO_TOL * max(1.0, float(np.max(np.abs(alpha), initial=0.0)))


def alpha_vector(sigma: CovarianceSpec, beta: typing.Sequence[float]) -> np.ndarray:
    """Compute alpha = Sigma beta in O(p) from the covariance structure.

    Compound symmetry gives alpha_j = (1 - rho) beta_j + rho sum(beta). The autoregressive case is the sum of
    a forward and a backward first order recursion, each equal to sum over k on one side of rho^|j-k| beta_k,
    with the diagonal term counted twice and subtracted once.

    Args:
        sigma (CovarianceSpec): The covariance.
        beta (typing.Sequence[float]): Coefficients, length p.

    Returns:
        np.ndarray: alpha.
    """
    beta = _check_beta(sigma, beta)
    if sigma.kind is CovarianceKind.IDENTITY:
        return beta.copy()
    if sigma.kind is CovarianceKind.CS:
        return (1.0 - sigma.rho) * beta + sigma.rho * math.fsum(beta)

    recursion = [1.0, -sigma.rho]
    forward = scipy.signal.lfilter([1.0], recursion, beta)
    backward = scipy.signal.lfilter([1.0], recursion, beta[::-1])[::-1]
    return forward + backward - beta


def _ar_bound(sigma: CovarianceSpec, alpha: np.ndarray, support: np.ndarray) -> typing.Optional[int]:
    """Size bound d + ceil(log(min_D |alpha| / |alpha_d|) / log|rho|) for beta supported on the first d."""
    d = support.size
    if not np.array_equal(support, np.arange(d)):
        logging.getLogger(__name__).info("beta support is not a leading block, no analytic bound")
        return None
    if sigma.rho == 0.0:
        return d

    smallest = float(np.min(np.abs(alpha[:d])))
    last = abs(float(alpha[d - 1]))
    if smallest == 0.0 or last == 0.0:
        logging.getLogger(__name__).warning("alpha vanishes on the support, no analytic bound")
        return None

    ratio = smallest / last
    if ratio >= 1.0:
        return d
    # the guard absorbs rounding when the log ratio is an exact integer
    return d + int(math.ceil(math.log(ratio) / math.log(abs(sigma.rho)) - 1.0e-9))


def condition_c1_set(sigma: CovarianceSpec, beta: typing.Sequence[float]) -> C1Result:
    """Smallest leading set of the |alpha| ranking that contains the support of beta and is separated.

    Variables are ranked by descending |alpha|, ties by ascending index. The result is the shortest prefix of
    that ranking which contains every nonzero coefficient and whose smallest |alpha| strictly exceeds the
    largest |alpha| outside it.

    Args:
        sigma (CovarianceSpec): The covariance.
        beta (typing.Sequence[float]): Coefficients, length p.

    Raises:
        ValueError: When beta is zero, or "C1 unverifiable" when no proper prefix is separated. A beta supported
            on all p variables always fails since an empty complement separates nothing.

    Returns:
        C1Result: The separating set, its margin and, for autoregressive covariance, the analytic size bound.
    """
    beta = _check_beta(sigma, beta)
    support = np.flatnonzero(beta)
    if support.size == 0:
        raise ValueError("beta has no nonzero coefficient")

    alpha = alpha_vector(sigma, beta)
    magnitude = np.abs(alpha)
    magnitude[_is_zero(alpha)] = 0.0
    order = np.lexsort((np.arange(sigma.p), -magnitude))
    position = np.empty(sigma.p, dtype=np.int64)
    position[order] = np.arange(sigma.p)

    for k in range(int(position[support].max()) + 1, sigma.p):
        if magnitude[order[k - 1]] > magnitude[order[k]]:
            break
    else:
        raise ValueError("C1 unverifiable: no proper subset is separated by |alpha|")

    bound = _ar_bound(sigma, alpha, support) if sigma.kind is CovarianceKind.AR else None
    return C1Result(
        selected=tuple(int(j) for j in np.sort(order[:k])),
        margin=float(magnitude[order[k - 1]] - magnitude[order[k]]),
        alpha=alpha,
        support=tuple(int(j) for j in support),
        bound=bound,
    )


def marginal_correlations(sigma: CovarianceSpec, beta: typing.Sequence[float], noise_sd: float = 1.0) -> np.ndarray:
    """Correlation of each X_j with Y = X'beta + eps, alpha_j / sqrt(beta'alpha + noise_sd^2).

    Args:
        sigma (CovarianceSpec): The covariance.
        beta (typing.Sequence[float]): Coefficients, length p.
        noise_sd (float, optional): Standard deviation of eps, positive. Defaults to 1.

    Returns:
        np.ndarray: One correlation per variable.
    """
    if not noise_sd > 0:
        raise ValueError(f"noise standard deviation must be positive, got {noise_sd}")
    beta = _check_beta(sigma, beta)
    alpha = alpha_vector(sigma, beta)
    return alpha / math.sqrt(float(beta @ alpha) + noise_sd * noise_sd)


def oracle_delta(
    sigma: CovarianceSpec,
    beta: typing.Sequence[float],
    selected: typing.Iterable[int],
    G_list: typing.Sequence[int],
    noise_sd: float = 1.0,
    tol: float = DEFAULT_TOL,
    lower: float = LOWER_LIMIT,
) -> float:
    """Smallest gap, over the slicing schemes, between the population statistics inside and outside a set.

    Args:
        sigma (CovarianceSpec): The covariance.
        beta (typing.Sequence[float]): Coefficients, length p.
        selected (typing.Iterable[int]): Zero-based indices of the set.
        G_list (typing.Sequence[int]): Slice counts of the schemes.
        noise_sd (float, optional): Standard deviation of the noise. Defaults to 1.
        tol (float, optional): Quadrature tolerance. Defaults to 1e-8.
        lower (float, optional): Quadrature truncation point. Defaults to -10.

    Returns:
        float: min over G of (min over the set minus max outside it); positive when the set is separated.
    """
    rho = np.abs(marginal_correlations(sigma, beta, noise_sd=noise_sd))
    inside = np.zeros(sigma.p, dtype=bool)
    inside[list(selected)] = True
    if not inside.any():
        raise ValueError("the set is empty")
    if not G_list:
        raise ValueError("at least one slicing scheme is required")

    weakest = float(rho[inside].min())
    strongest = float(rho[~inside].max()) if (~inside).any() else 0.0
    return min(
        oracle_kg_normal(weakest, G, tol=tol, lower=lower) - oracle_kg_normal(strongest, G, tol=tol, lower=lower)
        for G in G_list
    )


def cs_support_checks(sigma: CovarianceSpec, beta: typing.Sequence[float]) -> CsSupportReport:
    """Support diagnostics under compound symmetry.

    alpha vanishes off the support of beta exactly when the coefficients sum to zero. With rho > 0 and
    coefficients of one sign the active set is still separated.

    Args:
        sigma (CovarianceSpec): A compound symmetry covariance.
        beta (typing.Sequence[float]): Coefficients, length p.

    Returns:
        CsSupportReport: The diagnostics.
    """
    if sigma.kind is not CovarianceKind.CS:
        raise ValueError(f"compound symmetry covariance required, got {sigma.kind.value}")
    beta = _check_beta(sigma, beta)
    alpha = alpha_vector(sigma, beta)
    nonzero = np.flatnonzero(~_is_zero(alpha))
    active = beta[beta != 0]
    return CsSupportReport(
        nonzero_alpha=tuple(int(j) for j in nonzero),
        beta_sum=math.fsum(beta),
        exact_support=bool(np.array_equal(np.flatnonzero(beta), nonzero)),
        same_sign=bool(sigma.rho > 0 and active.size > 0 and (np.all(active > 0) or np.all(active < 0))),
    )
