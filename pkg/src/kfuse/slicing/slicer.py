"""Turn a typed response into slice assignments."""
import logging
import math
import numpy as np
import typing

from ..stats import quantile_rank_thresholds, stable_ranks
from .core import Response, ResponseKind, SliceAssignment, SliceGrid

MIN_SLICES = 3
"""Smallest number of slices in the default grid."""


def assign_continuous(y: typing.Sequence[float], G: int) -> SliceAssignment:
    """Slice a continuous response into `G` near-equal slices at its sample quantiles.

    The assignment depends only on the stable ranks of `y`.

    Args:
        y (typing.Sequence[float]): The response.
        G (int): Number of slices, 2 <= G <= n.

    Returns:
        SliceAssignment: The assignment, every slice nonempty.
    """
    ranks = stable_ranks(y).ranks
    cutoffs = quantile_rank_thresholds(ranks.size, G)
    H = np.searchsorted(cutoffs, ranks, side="left") + 1
    return SliceAssignment(G=G, H=H)


def assign_count(y: typing.Sequence[int], G: int) -> SliceAssignment:
    """Slice a count response: H = y + 1 when y < G - 1, otherwise H = G.

    Args:
        y (typing.Sequence[int]): Non-negative integer responses.
        G (int): Number of slices, at least 2.

    Returns:
        SliceAssignment: The assignment. Slices may be empty.
    """
    if G < 2:
        raise ValueError(f"at least 2 slices are required, got {G}")
    y = np.asarray(y, dtype=np.int64)
    if np.any(y < 0):
        raise ValueError("count response values must be non-negative")

    assignment = SliceAssignment(G=G, H=np.where(y < G - 1, y + 1, G))
    _warn_empty(assignment)
    return assignment


def assign_categorical(y: typing.Sequence[int], levels: int) -> SliceAssignment:
    """Use the category itself as the slice, H = y.

    Args:
        y (typing.Sequence[int]): Categories in 1..levels.
        levels (int): Number of categories, at least 2.

    Returns:
        SliceAssignment: The assignment with G = levels. Absent levels leave empty slices.
    """
    if levels < 2:
        raise ValueError(f"categorical response needs at least 2 levels, got {levels}")
    y = np.asarray(y, dtype=np.int64)
    if np.any(y < 1) or np.any(y > levels):
        raise ValueError(f"levels must be 1..G (G={levels})")

    assignment = SliceAssignment(G=levels, H=y)
    _warn_empty(assignment)
    return assignment


def default_grid_sizes(n: int, min_slices: int = MIN_SLICES) -> tuple[int, ...]:
    """The default fusion grid min_slices, ..., ceil(ln n).

    Args:
        n (int): Number of observations.
        min_slices (int, optional): Smallest scheme. Defaults to 3.

    Returns:
        tuple[int, ...]: The slice counts.
    """
    top = math.ceil(math.log(n)) if n > 0 else 0
    if top < min_slices:
        raise ValueError(
            f"n={n} is too small for the default slicing grid (ceil(ln n)={top} < {min_slices}); "
            "give the slices explicitly"
        )
    return tuple(range(min_slices, top + 1))


def build_grid(
    resp: Response, G_list: typing.Optional[typing.Sequence[int]] = None, min_slices: int = MIN_SLICES
) -> SliceGrid:
    """Build the slicing grid fused by the filter.

    Continuous and count responses get one scheme per entry of `G_list` (default min_slices, ..., ceil(ln n));
    a categorical response always gets the single scheme H = Y.

    Args:
        resp (Response): The response.
        G_list (typing.Optional[typing.Sequence[int]], optional): Explicit slice counts, strictly increasing.
            Defaults to None.
        min_slices (int, optional): Smallest scheme of the default grid. Defaults to 3.

    Returns:
        SliceGrid: The grid.
    """
    if resp.kind is ResponseKind.CATEGORICAL:
        if G_list:
            logging.getLogger(__name__).warning(
                "Ignoring slices=%s for a categorical response, slicing by level", list(G_list)
            )
        assignment = assign_categorical(resp.values, resp.levels)
        return SliceGrid(assignments=(assignment,), G_list=(assignment.G,))

    if G_list is None:
        sizes = default_grid_sizes(resp.n, min_slices=min_slices)
    else:
        sizes = tuple(int(g) for g in G_list)
        if not sizes:
            raise ValueError("slicing grid is empty")
        if any(g < 2 for g in sizes):
            raise ValueError("every scheme needs at least 2 slices")
        if any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ValueError(f"slice counts must be strictly increasing, got {list(sizes)}")
        if sizes[-1] > resp.n:
            raise ValueError("more slices than observations")

    if resp.kind is ResponseKind.COUNT:
        assignments = tuple(assign_count(resp.values, g) for g in sizes)
    else:
        assignments = tuple(assign_continuous(resp.values, g) for g in sizes)

    return SliceGrid(assignments=assignments, G_list=sizes)


def _warn_empty(assignment: SliceAssignment):
    if assignment.empty_slices:
        logging.getLogger(__name__).warning(
            "Slicing into G=%d leaves slices %s empty", assignment.G, list(assignment.empty_slices)
        )
