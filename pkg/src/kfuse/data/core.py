"""Data set containers."""
import dataclasses
import numpy as np
import typing

from ..slicing import Response, ResponseKind


@dataclasses.dataclass(frozen=True, kw_only=True)
class Dataset:
    """Covariates, a typed response and, for simulated data, the active variables."""

    X: np.ndarray
    """n x p covariate matrix."""
    resp: Response
    """The response."""
    truth: tuple[int, ...] = ()
    """Zero-based indices of the active covariates; empty when unknown."""
    label: str = ""
    """Descriptive name, e.g. the model id."""
    names: tuple[str, ...] = ()
    """Covariate names; defaults to x1, ..., xp."""

    def __post_init__(self):
        """Validate the data set."""
        X = np.asarray(self.X, dtype=float)
        if X.ndim != 2:
            raise ValueError("covariates must form a two-dimensional matrix")
        if X.shape[0] != self.resp.n:
            raise ValueError(f"length mismatch: {X.shape[0]} covariate rows, {self.resp.n} responses")
        if X.shape[1] < 1:
            raise ValueError("at least one covariate is required")
        if not np.all(np.isfinite(X)):
            raise ValueError("covariates contain non-finite values")
        object.__setattr__(self, "X", X)

        truth = tuple(sorted(int(j) for j in self.truth))
        if len(set(truth)) != len(truth) or any(j < 0 or j >= X.shape[1] for j in truth):
            raise ValueError(f"active set must hold distinct indices within 1..{X.shape[1]}")
        object.__setattr__(self, "truth", truth)

        names = tuple(str(v) for v in self.names) or tuple(f"x{j + 1}" for j in range(X.shape[1]))
        if len(names) != X.shape[1]:
            raise ValueError(f"{len(names)} covariate names for {X.shape[1]} covariates")
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        """Number of observations."""
        return int(self.X.shape[0])

    @property
    def p(self) -> int:
        """Number of covariates."""
        return int(self.X.shape[1])

    @property
    def kind(self) -> ResponseKind:
        """The response type."""
        return self.resp.kind


@dataclasses.dataclass(frozen=True, kw_only=True)
class DatasetMetadata:
    """Sidecar description of a data file."""

    model: str
    """Generating model id, or a free-form label."""
    response_kind: ResponseKind = ResponseKind.CONTINUOUS
    """Type of the response column."""
    n: typing.Optional[int] = None
    """Number of observations."""
    p: typing.Optional[int] = None
    """Number of covariates."""
    seed: typing.Optional[int] = None
    """Seed used to generate the data."""
    replicate: typing.Optional[int] = None
    """Replicate index mixed into the seed, if any."""
    truth: tuple[int, ...] = ()
    """Zero-based indices of the active covariates."""
    levels: typing.Optional[int] = None
    """Number of categories, categorical responses only."""

    def __post_init__(self):
        """Normalize field types."""
        object.__setattr__(self, "response_kind", ResponseKind(self.response_kind))
        object.__setattr__(self, "truth", tuple(int(j) for j in self.truth))

    @classmethod
    def of(
        cls, dataset: Dataset, seed: typing.Optional[int] = None, replicate: typing.Optional[int] = None
    ) -> "DatasetMetadata":
        """Describe a data set.

        Args:
            dataset (Dataset): The data set.
            seed (typing.Optional[int], optional): Generating seed, if any. Defaults to None.
            replicate (typing.Optional[int], optional): Replicate index, if any. Defaults to None.

        Returns:
            DatasetMetadata: The description.
        """
        return cls(
            model=dataset.label,
            response_kind=dataset.kind,
            n=dataset.n,
            p=dataset.p,
            seed=seed,
            replicate=replicate,
            truth=dataset.truth,
            levels=dataset.resp.levels,
        )
