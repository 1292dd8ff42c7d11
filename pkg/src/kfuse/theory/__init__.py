"""Analytical oracles for Gaussian designs."""
from .core import CovarianceKind, CovarianceSpec
from .oracle import kstar_normal, oracle_kg_normal, sample_kg_normal, LOWER_LIMIT
from .condition import (
    C1Result,
    CsSupportReport,
    alpha_vector,
    condition_c1_set,
    cs_support_checks,
    marginal_correlations,
    oracle_delta,
)
