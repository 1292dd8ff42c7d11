"""Unit tests for the theory package."""
import numpy as np
import pytest

from kfuse.theory import (
    CovarianceKind,
    CovarianceSpec,
    alpha_vector,
    condition_c1_set,
    cs_support_checks,
    kstar_normal,
    marginal_correlations,
    oracle_delta,
    oracle_kg_normal,
    sample_kg_normal,
)


def test_oracle_zero_correlation():
    """Independent variables have statistic 0."""
    assert oracle_kg_normal(0.0, 3) == 0.0


def test_oracle_near_perfect_correlation():
    """The statistic approaches 1 as |rho| approaches 1."""
    assert oracle_kg_normal(0.999, 3) == pytest.approx(1.0, abs=1e-6)


def test_oracle_symmetric_in_rho():
    """Only |rho| matters."""
    assert oracle_kg_normal(-0.5, 4) == oracle_kg_normal(0.5, 4)


def test_oracle_strictly_increasing_in_rho():
    """For fixed G the statistic grows with |rho|."""
    for G in range(3, 7):
        values = [oracle_kg_normal(rho, G) for rho in np.arange(0.0, 0.95, 0.1)]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert all(0.0 <= v <= 1.0 for v in values)


def test_oracle_grows_towards_one_with_slices():
    """Many slices push the statistic towards 1 for any nonzero correlation."""
    values = [oracle_kg_normal(0.5, G) for G in (3, 10, 100, 100_000)]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert values[-1] == pytest.approx(1.0, abs=0.05)


def test_oracle_invalid_arguments():
    """|rho| >= 1 and G < 2 are rejected."""
    with pytest.raises(ValueError):
        oracle_kg_normal(1.0, 3)
    with pytest.raises(ValueError):
        oracle_kg_normal(0.5, 1)


def test_kstar():
    """The all-slicings statistic is 1 for any dependence."""
    assert kstar_normal(0.0) == 0.0
    assert kstar_normal(-0.01) == 1.0
    with pytest.raises(ValueError):
        kstar_normal(-1.0)


def test_sample_matches_oracle():
    """The Monte Carlo statistic is close to the population value."""
    estimate = sample_kg_normal(0.5, 3, 100_000, seed=5)
    assert estimate == pytest.approx(oracle_kg_normal(0.5, 3), abs=0.03)


def test_sample_is_reproducible():
    """Equal seeds give equal statistics."""
    assert sample_kg_normal(0.3, 4, 500, seed=2) == sample_kg_normal(0.3, 4, 500, seed=2)


@pytest.mark.slow
def test_sample_matches_oracle_grid():
    """Monte Carlo and quadrature agree across correlations and slice counts."""
    for rho in (0.3, 0.5, 0.7):
        for G in (3, 4, 5, 6):
            estimate = sample_kg_normal(rho, G, 1_000_000, seed=G)
            assert estimate == pytest.approx(oracle_kg_normal(rho, G), abs=0.01)


def test_covariance_spec_validation():
    """Correlations must give a positive definite matrix."""
    with pytest.raises(ValueError):
        CovarianceSpec(kind="ar", p=5, rho=1.0)
    with pytest.raises(ValueError, match="compound symmetry"):
        CovarianceSpec(kind="cs", p=5, rho=-0.3)
    with pytest.raises(ValueError):
        CovarianceSpec(kind="identity", p=0)
    spec = CovarianceSpec(kind="compound_symmetry", p=5, rho=0.2)
    assert spec.kind is CovarianceKind.CS
    assert str(spec) == "CS(0.2)"


@pytest.mark.parametrize("kind,rho", [("cs", 0.5), ("ar", 0.7), ("ar", -0.4), ("identity", 0.0)])
def test_alpha_vector_matches_dense_product(kind, rho):
    """The structured product equals the dense matrix product."""
    spec = CovarianceSpec(kind=kind, p=200, rho=rho)
    beta = np.random.default_rng(6).normal(size=200)
    assert alpha_vector(spec, beta) == pytest.approx(spec.dense() @ beta, abs=1e-12)


def test_condition_identity():
    """Under the identity the set is the support."""
    beta = np.zeros(10)
    beta[:2] = [1.0, -1.0]
    result = condition_c1_set(CovarianceSpec(kind="identity", p=10), beta)
    assert result.selected == (0, 1)
    assert result.margin == pytest.approx(1.0)
    assert result.bound is None


def test_condition_compound_symmetry_zero_sum():
    """Coefficients summing to zero keep alpha on the support."""
    spec = CovarianceSpec(kind="cs", p=10, rho=0.7)
    beta = np.zeros(10)
    beta[:2] = [2.8, -2.8]
    result = condition_c1_set(spec, beta)
    assert result.selected == (0, 1)
    assert result.margin == pytest.approx(0.84)

    report = cs_support_checks(spec, beta)
    assert report.exact_support
    assert report.nonzero_alpha == (0, 1)
    assert report.beta_sum == 0.0
    assert not report.same_sign


def test_cs_support_same_sign():
    """Positive coefficients under positive correlation leak onto every variable."""
    spec = CovarianceSpec(kind="cs", p=6, rho=0.5)
    report = cs_support_checks(spec, [1.0, 2.0, 0, 0, 0, 0])
    assert report.same_sign
    assert not report.exact_support
    assert report.nonzero_alpha == tuple(range(6))
    assert condition_c1_set(spec, [1.0, 2.0, 0, 0, 0, 0]).selected == (0, 1)
    with pytest.raises(ValueError):
        cs_support_checks(CovarianceSpec(kind="ar", p=6, rho=0.5), np.ones(6))


def test_condition_autoregressive_bound():
    """The autoregressive set fits within the analytic bound."""
    beta = np.zeros(100)
    beta[:10] = 0.8
    result = condition_c1_set(CovarianceSpec(kind="ar", p=100, rho=0.7), beta)
    assert result.bound is not None and result.bound >= 10
    assert set(range(10)) <= set(result.selected)
    assert len(result.selected) <= result.bound
    assert result.margin > 0


def test_condition_unverifiable():
    """A dense coefficient vector leaves nothing to separate."""
    with pytest.raises(ValueError, match="C1 unverifiable"):
        condition_c1_set(CovarianceSpec(kind="identity", p=3), [1.0, 1.0, 1.0])
    with pytest.raises(ValueError, match="C1 unverifiable"):
        condition_c1_set(CovarianceSpec(kind="identity", p=3), [1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        condition_c1_set(CovarianceSpec(kind="identity", p=3), [0.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        condition_c1_set(CovarianceSpec(kind="identity", p=3), [1.0, 0.0])


def test_marginal_correlations():
    """Correlations of X_j with Y for the identity design."""
    rho = marginal_correlations(CovarianceSpec(kind="identity", p=3), [1.0, 1.0, 0.0], noise_sd=1.0)
    assert rho == pytest.approx([3**-0.5, 3**-0.5, 0.0])


def test_oracle_delta_positive_for_separated_set():
    """A separated set has a positive population gap."""
    spec = CovarianceSpec(kind="identity", p=6)
    beta = [1.0, -1.0, 0.0, 0.0, 0.0, 0.0]
    delta = oracle_delta(spec, beta, (0, 1), [3, 4])
    assert delta > 0
    assert delta == pytest.approx(min(oracle_kg_normal(3**-0.5, G) for G in (3, 4)), abs=1e-8)
    assert oracle_delta(spec, beta, (0, 2), [3]) < 0
