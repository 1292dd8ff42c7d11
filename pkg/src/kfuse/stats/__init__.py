"""Order statistics and dependence measure primitives shared by all screeners."""
from .core import (
    SortedSample,
    RankVector,
    stable_ranks,
    empirical_cdf,
    ks_two_sample,
    ks_two_sample_bruteforce,
    quantile_rank_thresholds,
)
from .dependence import pearson, kendall_tau, kendall_tau_bruteforce, distance_correlation, is_constant
from .quadrature import adaptive_quadrature, DEFAULT_TOL
