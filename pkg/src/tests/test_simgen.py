"""Unit tests for the simgen package."""
import numpy as np
import pytest

from kfuse.simgen import ModelId, ModelSpec, ar_gaussian, cs_gaussian, generate, make_rng, rng_draws
from kfuse.slicing import ResponseKind


def test_generate_is_deterministic():
    """Equal specifications give identical data."""
    spec = ModelSpec(id="3", n=50, p=20, seed=7)
    a = generate(spec)
    b = generate(spec)
    assert np.array_equal(a.X, b.X)
    assert np.array_equal(a.resp.values, b.resp.values)


def test_replicates_differ():
    """Replicate indices select independent streams."""
    spec = ModelSpec(id="4", n=50, p=10, seed=7)
    assert not np.array_equal(generate(spec, 0).X, generate(spec, 1).X)
    assert np.array_equal(generate(spec, 1).X, generate(spec, 1).X)


def test_variants_share_draws():
    """Model variants are monotone transforms of the same draws."""
    base = generate(ModelSpec(id="1a", n=40, p=8, seed=3))
    powered = generate(ModelSpec(id="1b", n=40, p=8, seed=3))
    response = generate(ModelSpec(id="1c", n=40, p=8, seed=3))
    assert np.array_equal(powered.X, base.X**9)
    assert np.array_equal(powered.resp.values, base.resp.values)
    assert np.array_equal(response.resp.values, base.resp.values**9)

    log_normal = generate(ModelSpec(id="2b", n=40, p=12, seed=3))
    assert np.allclose(np.log(log_normal.X) / 2.0, generate(ModelSpec(id="2a", n=40, p=12, seed=3)).X)


def test_truth_sets():
    """Each model reports its active set."""
    assert generate(ModelSpec(id="1a", n=20, p=5)).truth == (0, 1)
    assert generate(ModelSpec(id="2a", n=20, p=12)).truth == tuple(range(10))
    assert generate(ModelSpec(id="4", n=20, p=5)).truth == (0, 1, 2)
    assert generate(ModelSpec(id="5", n=20, p=25)).truth == (0, 1, 2, 3, 4, 19, 20, 21)


def test_count_model():
    """Model 6 yields non-negative integer counts."""
    data = generate(ModelSpec(id="6", n=200, p=5, seed=1))
    assert data.kind is ResponseKind.COUNT
    assert data.resp.values.dtype == np.int64
    assert np.all(data.resp.values >= 0)


def test_classification_model():
    """Model 7 yields five classes and plants mixtures in the class columns."""
    data = generate(ModelSpec(id="7", n=300, p=15, seed=2))
    assert data.kind is ResponseKind.CATEGORICAL
    assert data.resp.levels == 5
    assert data.truth == tuple(range(10))
    rows = data.resp.values == 1
    # mixture components sit at +-3, Cauchy draws rarely do
    assert np.all(np.abs(np.abs(data.X[rows, 0]) - 3.0) < 2.0)


def test_model_spec_validation():
    """Dimensions below the model minimum and tiny samples are rejected."""
    with pytest.raises(ValueError, match="p >= 22"):
        ModelSpec(id="5", n=50, p=21)
    with pytest.raises(ValueError):
        ModelSpec(id="1a", n=4, p=5)
    with pytest.raises(ValueError):
        ModelSpec(id="8", n=50, p=5)
    assert ModelSpec(id="1A", n=50, p=5).id is ModelId.M1A


def test_cs_gaussian_correlation():
    """Compound symmetric draws have the requested common correlation."""
    W = cs_gaussian(make_rng(0), 20_000, 3, 0.7)
    assert np.corrcoef(W[:, 0], W[:, 1])[0, 1] == pytest.approx(0.7, abs=0.02)


def test_ar_gaussian_correlation():
    """Autoregressive draws decay geometrically with lag."""
    W = ar_gaussian(make_rng(0), 20_000, 3, 0.7)
    assert np.corrcoef(W[:, 0], W[:, 2])[0, 1] == pytest.approx(0.49, abs=0.02)
    assert np.var(W[:, 2]) == pytest.approx(1.0, abs=0.05)


def test_rng_draws_poisson_zero_mean():
    """A zero Poisson mean gives zeros."""
    assert np.all(rng_draws("poisson", 1, 100, mu=0.0) == 0)
    with pytest.raises(ValueError):
        rng_draws("poisson", 1, 10)
    with pytest.raises(ValueError):
        rng_draws("poisson", 1, 10, mu=-1.0)


def test_rng_draws_distributions():
    """Sample summaries match the distributions."""
    normal = rng_draws("normal", 4, 50_000)
    assert normal.mean() == pytest.approx(0.0, abs=0.02)
    assert normal.std() == pytest.approx(1.0, abs=0.02)
    assert np.median(rng_draws("cauchy", 4, 50_000)) == pytest.approx(0.0, abs=0.03)
    uniform = rng_draws("uniform", 4, 1000)
    assert np.all((uniform >= 0) & (uniform < 1))
    mixture = rng_draws("mixture", 4, 1000)
    assert np.all(np.abs(np.abs(mixture) - 3.0) < 2.0)


def test_rng_draws_reproducible_and_validated():
    """Draws depend on the seed only; bad arguments are rejected."""
    assert np.array_equal(rng_draws("t2", 9, 20), rng_draws("t2", 9, 20))
    with pytest.raises(ValueError):
        rng_draws("gamma", 1, 10)
    with pytest.raises(ValueError):
        rng_draws("normal", 1, 0)
    with pytest.raises(ValueError):
        make_rng(-1)


def test_count_model_poisson_mean():
    """Where the log-mean is moderate the average count matches exp(0.8 x1 - 0.8 x2)."""
    data = generate(ModelSpec(id="6", n=100000, p=2, seed=9))
    log_mean = 0.8 * data.X[:, 0] - 0.8 * data.X[:, 1]
    rows = np.abs(log_mean) < 1.0
    assert rows.sum() > 10000
    assert data.resp.values[rows].mean() == pytest.approx(np.exp(log_mean[rows]).mean(), abs=0.05)
