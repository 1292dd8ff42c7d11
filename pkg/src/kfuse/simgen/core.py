"""Simulation model descriptors."""
import dataclasses
import enum
import typing

from ..slicing import ResponseKind


class ModelId(enum.Enum):
    """The simulation models."""

    M1A = "1a"
    """Linear model under CS(0.7), untransformed."""
    M1B = "1b"
    """Model 1a with covariates raised to the 9th power."""
    M1C = "1c"
    """Model 1a with the response raised to the 9th power."""
    M2A = "2a"
    """Linear model under AR(0.7), ten equal coefficients."""
    M2B = "2b"
    """Model 2a with covariates exp(2W)."""
    M2C = "2c"
    """Model 2a with response exp(.)."""
    M3 = "3"
    """Single index model with Cauchy covariates."""
    M4 = "4"
    """Additive model with uniform covariates."""
    M5 = "5"
    """Heteroskedastic model under AR(0.8)."""
    M6 = "6"
    """Poisson regression with t2 covariates."""
    M7 = "7"
    """Five class classification with mixture signals."""

    @classmethod
    def _missing_(cls, value: typing.Any) -> typing.Any:
        if isinstance(value, (str, int)):
            lowered = str(value).strip().lower()
            for member in cls:
                if member.value == lowered:
                    return member

        return super()._missing_(value)

    @property
    def minimum_p(self) -> int:
        """Smallest dimension the model is defined for."""
        return MODEL_MINIMUM_P[self.value[0]]

    @property
    def response_kind(self) -> ResponseKind:
        """Type of the generated response."""
        if self is ModelId.M6:
            return ResponseKind.COUNT
        if self is ModelId.M7:
            return ResponseKind.CATEGORICAL
        return ResponseKind.CONTINUOUS


MODEL_MINIMUM_P = {"1": 2, "2": 10, "3": 2, "4": 3, "5": 22, "6": 2, "7": 10}
"""Smallest dimension per model family."""

MIN_OBSERVATIONS = 8
"""Smallest sample size accepted by the generators."""


@dataclasses.dataclass(frozen=True, kw_only=True)
class ModelSpec:
    """A simulation model with its size and seed."""

    id: ModelId
    """The model."""
    n: int
    """Number of observations."""
    p: int
    """Number of covariates."""
    seed: int = 0
    """Non-negative 64-bit seed."""

    def __post_init__(self):
        """Validate the model parameters."""
        object.__setattr__(self, "id", ModelId(self.id))
        if self.n < MIN_OBSERVATIONS:
            raise ValueError(f"model {self.id.value} needs n >= {MIN_OBSERVATIONS}, got n={self.n}")
        if self.p < self.id.minimum_p:
            raise ValueError(f"model {self.id.value} needs p >= {self.id.minimum_p}, got p={self.p}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a non-negative 64-bit integer, got {self.seed}")
