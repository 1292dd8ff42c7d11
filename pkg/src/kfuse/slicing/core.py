"""Response and slicing data structures."""
import dataclasses
import enum
import numpy as np
import typing


class ResponseKind(enum.Enum):
    """Type of response variable."""

    CONTINUOUS = "continuous"
    """Real-valued response, sliced at sample quantiles."""
    COUNT = "count"
    """Non-negative integer response, sliced by truncation."""
    CATEGORICAL = "categorical"
    """Class labels 1..levels, each level is a slice."""

    @classmethod
    def _missing_(cls, value: typing.Any) -> typing.Any:
        if isinstance(value, str):
            for member in cls:
                if member.value == value.lower():
                    return member

        return super()._missing_(value)


@dataclasses.dataclass(frozen=True, kw_only=True)
class Response:
    """A typed response vector."""

    kind: ResponseKind
    """The response type."""
    values: np.ndarray
    """Observed responses: reals for continuous responses, integers otherwise."""
    levels: typing.Optional[int] = None
    """Number of categories, categorical responses only."""

    def __post_init__(self):
        """Validate and freeze the values."""
        kind = ResponseKind(self.kind)
        object.__setattr__(self, "kind", kind)

        values = np.asarray(self.values)
        if values.ndim != 1:
            raise ValueError("response must be a one-dimensional vector")
        if values.size < 2:
            raise ValueError("response requires at least 2 observations")

        if kind is ResponseKind.CONTINUOUS:
            values = values.astype(float)
            if not np.all(np.isfinite(values)):
                raise ValueError("continuous response contains non-finite values")
        else:
            if values.dtype.kind == "f":
                if not np.all(np.isfinite(values)) or np.any(values != np.round(values)):
                    raise ValueError(f"{kind.value} response values must be integers")
            elif values.dtype.kind not in "iu":
                raise ValueError(f"{kind.value} response values must be integers")
            values = values.astype(np.int64)

            if kind is ResponseKind.COUNT and np.any(values < 0):
                raise ValueError("count response values must be non-negative")

            if kind is ResponseKind.CATEGORICAL:
                levels = self.levels if self.levels is not None else int(values.max())
                if levels < 2:
                    raise ValueError("categorical response needs at least 2 levels")
                if np.any(values < 1) or np.any(values > levels):
                    raise ValueError(f"levels must be 1..G (G={levels})")
                object.__setattr__(self, "levels", int(levels))

        if kind is not ResponseKind.CATEGORICAL:
            object.__setattr__(self, "levels", None)

        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        """Number of observations."""
        return int(self.values.size)

    def __len__(self) -> int:
        """Number of observations."""
        return self.n

    def indicator_matrix(self) -> np.ndarray:
        """One-hot encoding of a categorical response.

        Returns:
            np.ndarray: An n x levels 0/1 matrix.
        """
        if self.kind is not ResponseKind.CATEGORICAL:
            raise ValueError("indicator matrix requires a categorical response")
        return (self.values[:, None] == np.arange(1, self.levels + 1)[None, :]).astype(float)

    def take(self, index: np.ndarray) -> "Response":
        """Select a subset (or permutation) of observations.

        Args:
            index (np.ndarray): Row indices.

        Returns:
            Response: The response restricted to `index`.
        """
        return Response(kind=self.kind, values=self.values[index], levels=self.levels)


@dataclasses.dataclass(frozen=True, kw_only=True)
class SliceAssignment:
    """Slice labels H for one slicing scheme."""

    G: int
    """Number of slices."""
    H: np.ndarray
    """Slice label per observation, in 1..G."""
    counts: np.ndarray = None
    """Observations per slice, computed from `H`."""

    def __post_init__(self):
        """Validate labels and derive slice counts."""
        H = np.asarray(self.H, dtype=np.int64)
        if self.G < 1:
            raise ValueError(f"slice count must be positive, got {self.G}")
        if H.ndim != 1 or np.any(H < 1) or np.any(H > self.G):
            raise ValueError(f"slice labels must lie in 1..{self.G}")
        counts = np.bincount(H, minlength=self.G + 1)[1:]
        H.setflags(write=False)
        counts.setflags(write=False)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "counts", counts)

    @property
    def n(self) -> int:
        """Number of observations."""
        return int(self.H.size)

    @property
    def empty_slices(self) -> tuple[int, ...]:
        """The 1-based labels of slices without observations."""
        return tuple(int(s) + 1 for s in np.flatnonzero(self.counts == 0))

    @property
    def nonempty(self) -> int:
        """Number of slices holding at least one observation."""
        return int(np.count_nonzero(self.counts))

    @property
    def is_degenerate(self) -> bool:
        """`True` when fewer than 2 slices are populated, so no pair of slices can be compared."""
        return self.nonempty < 2


@dataclasses.dataclass(frozen=True, kw_only=True)
class SliceGrid:
    """The slicing schemes fused into one statistic."""

    assignments: tuple[SliceAssignment, ...]
    """One assignment per scheme."""
    G_list: tuple[int, ...]
    """Number of slices of each scheme."""

    def __post_init__(self):
        """Validate the grid."""
        assignments = tuple(self.assignments)
        G_list = tuple(int(g) for g in self.G_list)
        if not assignments:
            raise ValueError("slicing grid is empty")
        if len(assignments) != len(G_list) or any(a.G != g for a, g in zip(assignments, G_list)):
            raise ValueError("slice counts do not match the assignments")
        if len({a.n for a in assignments}) != 1:
            raise ValueError("assignments cover different numbers of observations")
        object.__setattr__(self, "assignments", assignments)
        object.__setattr__(self, "G_list", G_list)

    @property
    def n(self) -> int:
        """Number of observations."""
        return self.assignments[0].n

    def __len__(self) -> int:
        """Number of slicing schemes."""
        return len(self.assignments)

    def __iter__(self) -> typing.Iterator[SliceAssignment]:
        """Iterate over the slicing schemes."""
        return iter(self.assignments)
