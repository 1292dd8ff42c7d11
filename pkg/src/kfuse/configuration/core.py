"""Configuration data classes."""
import dacite
import dataclasses
from typing import Optional


class Dictable:
    """A class that is convertable to a dictionary."""

    def as_dict(self) -> dict:
        """Convert this class to a dictionary."""
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True, kw_only=True)
class RunData(Dictable):
    """Data class for the run."""

    threads: int = 0
    """Worker threads used for screening and benchmarks; 0 uses every available core."""
    block_size: int = 256
    """Number of covariate columns handed to a worker in a single task."""

    def __post_init__(self):
        """Post-creation validation."""
        if self.threads < 0:
            raise ValueError(f"run.threads must be non-negative, got {self.threads}.")
        if self.block_size < 1:
            raise ValueError(f"run.block_size must be positive, got {self.block_size}.")


@dataclasses.dataclass(frozen=True, kw_only=True)
class ScreeningData(Dictable):
    """Defaults applied when screening."""

    slices: Optional[list[int]] = None
    """Explicit slicing grid. When omitted, the grid is 3, ..., ceil(ln n)."""
    dn_factor: float = 1.0
    """Constant `a` in the default retained-set size d_n = a * ceil(n / ln n)."""
    min_slices: int = 3
    """Smallest number of slices in the default grid."""

    def __post_init__(self):
        """Post-creation validation."""
        if self.dn_factor <= 0:
            raise ValueError(f"screening.dn_factor must be positive, got {self.dn_factor}.")
        if self.min_slices < 2:
            raise ValueError(f"screening.min_slices must be at least 2, got {self.min_slices}.")
        if self.slices is not None and any(g < 2 for g in self.slices):
            raise ValueError("screening.slices entries must be at least 2.")


@dataclasses.dataclass(frozen=True, kw_only=True)
class BenchData(Dictable):
    """Benchmark defaults."""

    replicates: int = 100
    """Number of simulated replicates per benchmark."""
    bootstrap_resamples: int = 1000
    """Resamples used for the bootstrap standard error of the median."""
    master_seed: int = 42
    """Seed from which every replicate seed is derived."""

    def __post_init__(self):
        """Post-creation validation."""
        if self.replicates < 1:
            raise ValueError(f"bench.replicates must be positive, got {self.replicates}.")
        if self.bootstrap_resamples < 1:
            raise ValueError(f"bench.bootstrap_resamples must be positive, got {self.bootstrap_resamples}.")


@dataclasses.dataclass(frozen=True, kw_only=True)
class TheoryData(Dictable):
    """Numerical settings for the analytical oracles."""

    quadrature_tol: float = 1.0e-8
    """Absolute tolerance of the adaptive quadrature."""
    lower_limit: float = -10.0
    """Truncation point replacing the infinite lower integration limit."""


@dataclasses.dataclass(frozen=True, kw_only=True)
class Configuration(Dictable):
    """Application configuration."""

    run: RunData = RunData()
    """The run data."""
    screening: ScreeningData = ScreeningData()
    """Screening defaults."""
    bench: BenchData = BenchData()
    """Benchmark defaults."""
    theory: TheoryData = TheoryData()
    """Oracle settings."""

    @classmethod
    def from_dict(cls, data: dict):
        """Construct a Configuration instance from the provided data dictionary.

        Args:
            data (dict): data dictionary

        Raises:
            ValueError: When the data does not describe a valid configuration.

        Returns:
            Configuration: The configuration instance.
        """
        try:
            return dacite.from_dict(
                data_class=cls,
                data=data or {},
                config=DACITE_CONFIG,
            )
        except dacite.DaciteError as e:
            raise ValueError(f"invalid configuration: {e}") from e


DACITE_CONFIG = dacite.Config(
    type_hooks={float: float},
    strict=True,
)
