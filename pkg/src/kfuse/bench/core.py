"""Benchmark data classes."""
import dataclasses
import typing

from ..screening import MethodSpec
from ..simgen import ModelId, ModelSpec


@dataclasses.dataclass(frozen=True, kw_only=True)
class BenchConfig:
    """A replicated screening experiment on one simulation model."""

    model: ModelSpec
    """Model, size and master seed. Replicate r is generated from (model.seed, r)."""
    methods: tuple[MethodSpec, ...]
    """Methods to compare, in report order."""
    replicates: int = 100
    """Number of replicates."""
    bootstrap_resamples: int = 1000
    """Resamples of the bootstrap standard error of the median."""
    slices: typing.Optional[tuple[int, ...]] = None
    """Slicing grid of the fused filter; the default grid when omitted."""
    min_slices: int = 3
    """Smallest scheme of the default grid."""
    threads: int = 1
    """Worker threads across replicates."""
    block_size: int = 256
    """Columns per screening task."""

    def __post_init__(self):
        """Validate the configuration."""
        object.__setattr__(self, "methods", tuple(self.methods))
        if self.replicates < 1:
            raise ValueError(f"at least one replicate is required, got {self.replicates}")
        if not self.methods:
            raise ValueError("at least one method is required")
        if len({m.label for m in self.methods}) != len(self.methods):
            raise ValueError("methods must be distinct")
        if self.bootstrap_resamples < 1:
            raise ValueError(f"bootstrap resamples must be positive, got {self.bootstrap_resamples}")

    @property
    def master_seed(self) -> int:
        """Seed from which every replicate is derived."""
        return self.model.seed

    def fused_slices(self) -> typing.Optional[tuple[int, ...]]:
        """Slicing grid used by the fused filter on this model.

        The count model is screened with the single scheme H = min(Y + 1, 3).
        """
        if self.model.id is ModelId.M6:
            return (3,)
        return self.slices


@dataclasses.dataclass(frozen=True, kw_only=True)
class MethodReport:
    """Minimum model sizes of one method over all replicates."""

    label: str
    """Method label."""
    mms: tuple[int, ...] = ()
    """Minimum model size per replicate, in replicate order."""
    median: typing.Optional[float] = None
    """Median of `mms`."""
    se: typing.Optional[float] = None
    """Bootstrap standard error of the median."""
    runtime: float = 0.0
    """Screening seconds summed over replicates."""
    skipped: typing.Optional[str] = None
    """Reason the method was not run, if it was skipped."""

    @property
    def is_skipped(self) -> bool:
        """Whether the method was skipped."""
        return self.skipped is not None

    def as_dict(self, timing: bool = False) -> dict:
        """Convert to a JSON-ready dictionary.

        Args:
            timing (bool, optional): Include the runtime. Defaults to False.

        Returns:
            dict: The report.
        """
        record = {
            "method": self.label,
            "median": self.median,
            "se": self.se,
            "mms": list(self.mms),
            "skipped": self.skipped,
        }
        if timing:
            record["runtime"] = self.runtime
        return record


@dataclasses.dataclass(frozen=True, kw_only=True)
class BenchReport:
    """Result of a benchmark."""

    model: str
    """Model id."""
    n: int
    """Observations per replicate."""
    p: int
    """Covariates per replicate."""
    replicates: int
    """Number of replicates."""
    master_seed: int
    """Master seed."""
    truth_size: int
    """Number of active covariates."""
    methods: tuple[MethodReport, ...]
    """One report per method, in configuration order."""
    runtime: float = 0.0
    """Wall clock seconds of the whole benchmark."""

    def method(self, label: str) -> MethodReport:
        """The report of one method.

        Args:
            label (str): Method label.

        Returns:
            MethodReport: The report.
        """
        for report in self.methods:
            if report.label == label:
                return report
        raise KeyError(label)

    def as_dict(self, timing: bool = False) -> dict:
        """Convert to a JSON-ready dictionary.

        Args:
            timing (bool, optional): Include runtimes, which vary from run to run. Defaults to False.

        Returns:
            dict: The report.
        """
        record = {
            "model": self.model,
            "n": self.n,
            "p": self.p,
            "replicates": self.replicates,
            "master_seed": self.master_seed,
            "truth_size": self.truth_size,
            "methods": [m.as_dict(timing=timing) for m in self.methods],
        }
        if timing:
            record["runtime"] = self.runtime
        return record
