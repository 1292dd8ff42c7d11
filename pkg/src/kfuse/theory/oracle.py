"""Population values of the Kolmogorov statistic under a bivariate normal model."""
import math
import numpy as np
import scipy.special
import scipy.stats

from ..screening import khat_single
from ..simgen.rng import draw, make_rng
from ..slicing import assign_continuous
from ..stats import adaptive_quadrature, DEFAULT_TOL

LOWER_LIMIT = -10.0
"""Truncation point of the integral; the standard normal mass below it is under 1e-20."""


def _check_rho(rho: float) -> float:
    rho = float(rho)
    if not abs(rho) < 1:
        raise ValueError(f"|rho| must be below 1, got rho={rho}")
    return rho


def oracle_kg_normal(rho: float, G: int, tol: float = DEFAULT_TOL, lower: float = LOWER_LIMIT) -> float:
    """Population Kolmogorov statistic for G equal-probability slices of a normal response.

    With (X, Y) bivariate normal with correlation rho, the largest gap between slice-conditional CDFs of X is
    attained between the two extreme slices and equals

        G * integral from -inf to Phi^-1(1/G) of (2 Phi(-|rho| y / sqrt(1 - rho^2)) - 1) phi(y) dy.

    The value is strictly increasing in |rho| for fixed G.

    Args:
        rho (float): Correlation, |rho| < 1.
        G (int): Number of slices, at least 2.
        tol (float, optional): Absolute error target of the result. Defaults to 1e-8.
        lower (float, optional): Truncation point replacing -inf. Defaults to -10.

    Raises:
        ValueError: When |rho| >= 1 or G < 2.

    Returns:
        float: The statistic in [0, 1].
    """
    rho = _check_rho(rho)
    if G < 2:
        raise ValueError(f"at least 2 slices are required, got G={G}")
    if rho == 0.0:
        return 0.0

    slope = abs(rho) / math.sqrt(1.0 - rho * rho)
    upper = float(scipy.special.ndtri(1.0 / G))

    def integrand(y: float) -> float:
        return (2.0 * scipy.special.ndtr(-slope * y) - 1.0) * scipy.stats.norm.pdf(y)

    value = G * adaptive_quadrature(integrand, lower, upper, tol=tol / G)
    return min(1.0, max(0.0, value))


def kstar_normal(rho: float) -> float:
    """Population Kolmogorov statistic over all slicings: 1 for any nonzero correlation, 0 otherwise.

    Args:
        rho (float): Correlation, |rho| < 1.

    Returns:
        float: 0.0 or 1.0.
    """
    return 1.0 if _check_rho(rho) != 0.0 else 0.0


def sample_kg_normal(rho: float, G: int, n: int, seed: int = 0) -> float:
    """Monte Carlo counterpart of `oracle_kg_normal`.

    Draws n bivariate normal pairs, slices Y at its sample quantiles and returns the single-scheme statistic.

    Args:
        rho (float): Correlation, |rho| < 1.
        G (int): Number of slices.
        n (int): Number of draws.
        seed (int, optional): Seed of the draws. Defaults to 0.

    Returns:
        float: The sample statistic.
    """
    rho = _check_rho(rho)
    rng = make_rng(seed)
    z = draw(rng, "normal", (n, 2))
    x = z[:, 0]
    y = rho * z[:, 0] + math.sqrt(1.0 - rho * rho) * z[:, 1]
    return khat_single(x, assign_continuous(np.asarray(y), G))
