"""Unit tests for stats/core.py."""
import numpy as np
import pytest

from kfuse.stats import (
    SortedSample,
    empirical_cdf,
    ks_two_sample,
    ks_two_sample_bruteforce,
    quantile_rank_thresholds,
    stable_ranks,
)


def test_sorted_sample_rejects_empty():
    """An empty sample is an error."""
    with pytest.raises(ValueError, match="empty sample"):
        SortedSample(np.array([]))
    with pytest.raises(ValueError, match="empty sample"):
        SortedSample.of([])


def test_sorted_sample_rejects_unsorted():
    """Values must be non-decreasing."""
    with pytest.raises(ValueError):
        SortedSample(np.array([2.0, 1.0]))


def test_sorted_sample_of_sorts():
    """Arbitrary input is sorted."""
    s = SortedSample.of([3.0, 1.0, 2.0, 1.0])
    assert s.n == 4
    assert list(s.values) == [1.0, 1.0, 2.0, 3.0]


def test_empirical_cdf():
    """The CDF counts values less than or equal to x."""
    s = SortedSample.of([1.0, 2.0, 2.0, 4.0])
    assert empirical_cdf(s, 0.0) == 0.0
    assert empirical_cdf(s, 1.0) == 0.25
    assert empirical_cdf(s, 2.0) == 0.75
    assert empirical_cdf(s, 3.0) == 0.75
    assert empirical_cdf(s, 4.0) == 1.0
    assert empirical_cdf(s, 100.0) == 1.0


def test_stable_ranks_break_ties_by_position():
    """Tied values are ranked by their original order."""
    ranks = stable_ranks([3.0, 1.0, 3.0, 2.0]).ranks
    assert list(ranks) == [3, 1, 4, 2]


def test_ks_disjoint_samples():
    """Completely separated samples have statistic 1."""
    assert ks_two_sample(SortedSample.of([1, 2, 3]), SortedSample.of([4, 5, 6])) == 1.0


def test_ks_identical_samples():
    """Identical samples have statistic 0."""
    s = SortedSample.of([1.0, 2.0, 2.0, 5.0])
    assert ks_two_sample(s, s) == 0.0


def test_ks_known_value():
    """A hand-computed example."""
    a = SortedSample.of([1.0, 3.0])
    b = SortedSample.of([2.0, 4.0])
    assert ks_two_sample(a, b) == 0.5


def test_ks_ties_across_samples():
    """Ties between the samples are evaluated after every tied value."""
    a = SortedSample.of([1.0, 1.0, 2.0])
    b = SortedSample.of([1.0, 2.0, 2.0])
    # F_a(1) = 2/3, F_b(1) = 1/3
    assert ks_two_sample(a, b) == pytest.approx(1.0 / 3.0)
    assert ks_two_sample(a, b) == ks_two_sample_bruteforce(a, b)


def test_ks_symmetric():
    """Swapping the samples does not change the statistic."""
    rng = np.random.default_rng(7)
    a = SortedSample.of(rng.normal(size=17))
    b = SortedSample.of(rng.normal(size=9) + 0.5)
    assert ks_two_sample(a, b) == ks_two_sample(b, a)


def test_ks_matches_bruteforce():
    """The merged scan equals the quadratic reference exactly on random instances with ties."""
    rng = np.random.default_rng(20240611)
    for _ in range(1000):
        na, nb = rng.integers(1, 30, size=2)
        a = SortedSample.of(rng.integers(0, 8, size=na).astype(float))
        b = SortedSample.of(rng.integers(0, 8, size=nb).astype(float))
        assert ks_two_sample(a, b) == ks_two_sample_bruteforce(a, b)


def test_quantile_rank_thresholds():
    """Cutoffs are ceil(l n / G)."""
    assert list(quantile_rank_thresholds(10, 3)) == [4, 7, 10]
    assert list(quantile_rank_thresholds(9, 3)) == [3, 6, 9]
    assert list(quantile_rank_thresholds(5, 5)) == [1, 2, 3, 4, 5]


def test_quantile_rank_thresholds_errors():
    """G must lie in 2..n."""
    with pytest.raises(ValueError, match="more slices than observations"):
        quantile_rank_thresholds(3, 4)
    with pytest.raises(ValueError):
        quantile_rank_thresholds(10, 1)


def test_ks_interleaved_example():
    """Samples {1, 2} and {1.5, 2.5} differ by one half."""
    assert ks_two_sample(SortedSample.of([1.0, 2.0]), SortedSample.of([1.5, 2.5])) == 0.5


@pytest.mark.parametrize("transform", [lambda v: v**3, np.arctan, np.exp])
def test_ks_invariant_under_increasing_transforms(transform):
    """A strictly increasing transform of both samples leaves the statistic bit-identical."""
    rng = np.random.default_rng(31)
    for _ in range(200):
        na, nb = rng.integers(1, 40, size=2)
        if rng.random() < 0.5:
            a, b = rng.normal(size=na), rng.normal(size=nb) + 0.3
        else:
            a, b = rng.integers(-4, 5, size=na).astype(float), rng.integers(-4, 5, size=nb).astype(float)
        expected = ks_two_sample(SortedSample.of(a), SortedSample.of(b))
        assert ks_two_sample(SortedSample.of(transform(a)), SortedSample.of(transform(b))) == expected


def test_quantile_rank_thresholds_examples():
    """Cutoffs for 200 observations in 3 slices and 5 in 2."""
    assert list(quantile_rank_thresholds(200, 3)) == [67, 134, 200]
    assert list(quantile_rank_thresholds(5, 2)) == [3, 5]
