"""Unit tests for the slicing package."""
import numpy as np
import pytest

from kfuse.slicing import (
    Response,
    ResponseKind,
    SliceAssignment,
    SliceGrid,
    assign_categorical,
    assign_continuous,
    assign_count,
    build_grid,
    default_grid_sizes,
)


def test_response_kind_is_case_insensitive():
    """Kinds parse from any case."""
    assert ResponseKind("Count") is ResponseKind.COUNT


def test_response_rejects_float_counts():
    """Count responses must hold integers."""
    with pytest.raises(ValueError, match="integers"):
        Response(kind="count", values=np.array([0.0, 1.5, 2.0]))


def test_response_accepts_integral_floats():
    """Integral floats are accepted as counts."""
    resp = Response(kind="count", values=np.array([0.0, 1.0, 2.0]))
    assert resp.values.dtype == np.int64


def test_response_categorical_levels():
    """Categories must be 1..levels."""
    with pytest.raises(ValueError, match="levels must be 1..G"):
        Response(kind="categorical", values=np.array([0, 1, 2]))
    resp = Response(kind="categorical", values=np.array([1, 3, 2, 3]))
    assert resp.levels == 3


def test_indicator_matrix():
    """One column per level."""
    resp = Response(kind="categorical", values=np.array([1, 3, 2]), levels=3)
    assert resp.indicator_matrix().tolist() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]


def test_assign_continuous_equal_slices():
    """Ten observations in three slices get sizes 4, 3, 3."""
    y = np.array([5.0, 1.0, 9.0, 3.0, 7.0, 2.0, 8.0, 4.0, 6.0, 0.0])
    a = assign_continuous(y, 3)
    assert list(a.counts) == [4, 3, 3]
    # the four smallest responses are in slice 1
    assert set(np.flatnonzero(a.H == 1)) == {1, 3, 5, 9}


def test_assign_continuous_never_empty():
    """Quantile slicing fills every slice, also with ties."""
    y = np.array([1.0, 1.0, 1.0, 1.0, 2.0, 2.0])
    for G in range(2, 7):
        assert assign_continuous(y, G).nonempty == G


def test_assign_continuous_too_many_slices():
    """G above n is an error."""
    with pytest.raises(ValueError, match="more slices than observations"):
        assign_continuous([1.0, 2.0], 3)


def test_assign_continuous_depends_on_ranks_only():
    """A strictly increasing transform does not change the slicing."""
    y = np.random.default_rng(1).normal(size=50)
    assert np.array_equal(assign_continuous(y, 4).H, assign_continuous(np.exp(y), 4).H)


def test_assign_count():
    """H = y + 1 below G - 1, G above."""
    a = assign_count([0, 1, 2, 5, 1], 3)
    assert list(a.H) == [1, 2, 3, 3, 2]


def test_assign_count_empty_slice_warning(caplog):
    """Empty count slices are logged, not raised."""
    a = assign_count([0, 0, 5], 3)
    assert a.empty_slices == (2,)
    assert "empty" in caplog.text


def test_assign_categorical():
    """Categories are the slices."""
    a = assign_categorical([1, 2, 2, 4], 4)
    assert a.G == 4
    assert a.empty_slices == (3,)
    with pytest.raises(ValueError, match="levels must be 1..G"):
        assign_categorical([0, 1], 2)


def test_slice_assignment_validates_labels():
    """Labels outside 1..G are rejected."""
    with pytest.raises(ValueError):
        SliceAssignment(G=2, H=np.array([1, 3]))


def test_degenerate_assignment():
    """One populated slice is degenerate."""
    a = SliceAssignment(G=3, H=np.array([2, 2, 2]))
    assert a.is_degenerate


def test_default_grid_sizes():
    """n = 200 gives 3..6."""
    assert default_grid_sizes(200) == (3, 4, 5, 6)
    with pytest.raises(ValueError):
        default_grid_sizes(5)


def test_build_grid_default():
    """A continuous response gets the default grid."""
    resp = Response(kind="continuous", values=np.random.default_rng(0).normal(size=200))
    grid = build_grid(resp)
    assert grid.G_list == (3, 4, 5, 6)
    assert len(grid) == 4
    assert grid.n == 200


def test_build_grid_explicit_validation():
    """Explicit grids must be strictly increasing and fit n."""
    resp = Response(kind="continuous", values=np.arange(10.0))
    assert build_grid(resp, [2, 5]).G_list == (2, 5)
    with pytest.raises(ValueError, match="strictly increasing"):
        build_grid(resp, [4, 3])
    with pytest.raises(ValueError, match="more slices than observations"):
        build_grid(resp, [3, 11])
    with pytest.raises(ValueError):
        build_grid(resp, [1, 3])


def test_build_grid_categorical_ignores_slices(caplog):
    """A categorical response is always sliced by level."""
    resp = Response(kind="categorical", values=np.array([1, 2, 3, 1, 2, 3]))
    grid = build_grid(resp, [3, 4])
    assert grid.G_list == (3,)
    assert "Ignoring" in caplog.text


def test_build_grid_count():
    """Count responses are sliced by truncation."""
    resp = Response(kind="count", values=np.array([0, 1, 2, 3, 0, 7]))
    grid = build_grid(resp, [3])
    assert list(next(iter(grid)).H) == [1, 2, 3, 3, 1, 3]


def test_slice_grid_validation():
    """A grid needs matching counts and lengths."""
    a = SliceAssignment(G=2, H=np.array([1, 2, 1]))
    b = SliceAssignment(G=2, H=np.array([1, 2]))
    with pytest.raises(ValueError):
        SliceGrid(assignments=(), G_list=())
    with pytest.raises(ValueError):
        SliceGrid(assignments=(a, b), G_list=(2, 2))
    with pytest.raises(ValueError):
        SliceGrid(assignments=(a,), G_list=(3,))


def test_assign_continuous_example():
    """Six responses in three slices follow their ranks."""
    a = assign_continuous([5.0, 1.0, 3.0, 2.0, 6.0, 4.0], 3)
    assert list(a.H) == [3, 1, 2, 1, 3, 2]


@pytest.mark.parametrize("transform", [lambda v: v**3, np.arctan, np.exp])
def test_assign_continuous_balanced_under_transforms(transform):
    """Slices stay balanced and are unchanged by increasing transforms of the response."""
    rng = np.random.default_rng(13)
    for n in (7, 50, 200, 1001):
        y = rng.normal(size=n)
        for G in range(2, min(n, 12) + 1):
            a = assign_continuous(y, G)
            b = assign_continuous(transform(y), G)
            assert np.array_equal(a.H, b.H)
            assert a.counts.max() - a.counts.min() <= 1
            assert np.all(a.counts / n <= 2.0 / G)
