"""Unit tests for stats/quadrature.py."""
import math
import pytest
import scipy.stats

from kfuse.stats import adaptive_quadrature


def test_polynomial():
    """Integrate x^2 over [0, 3]."""
    assert adaptive_quadrature(lambda x: x * x, 0.0, 3.0) == pytest.approx(9.0, abs=1e-10)


def test_normal_mass():
    """The truncated standard normal integrates to Phi(b) - Phi(-10)."""
    value = adaptive_quadrature(scipy.stats.norm.pdf, -10.0, 0.5, tol=1e-10)
    assert value == pytest.approx(scipy.stats.norm.cdf(0.5), abs=1e-9)


def test_invalid_limits():
    """Limits must be finite and ordered."""
    with pytest.raises(ValueError):
        adaptive_quadrature(math.sin, 1.0, 0.0)
    with pytest.raises(ValueError):
        adaptive_quadrature(math.sin, -math.inf, 0.0)


def test_invalid_tolerance():
    """The tolerance must be positive."""
    with pytest.raises(ValueError):
        adaptive_quadrature(math.sin, 0.0, 1.0, tol=0.0)


def test_non_finite_integrand():
    """A non-finite integrand value is an error."""
    with pytest.raises(ValueError, match="not finite"):
        adaptive_quadrature(lambda x: math.inf, 0.0, 1.0)
