"""Core screening data classes."""
import dataclasses
import math
import numpy as np
import typing

from ..slicing import SliceGrid


def default_dn(n: int, factor: float = 1.0) -> int:
    """The default number of retained variables, a * ceil(n / ln n).

    Args:
        n (int): Number of observations, at least 2.
        factor (float, optional): The constant `a`. Defaults to 1.

    Returns:
        int: d_n, at least 1.
    """
    if n < 2:
        raise ValueError(f"at least 2 observations are required, got {n}")
    return max(1, int(math.ceil(factor * math.ceil(n / math.log(n)))))


def rank_by_score(statistics: np.ndarray) -> np.ndarray:
    """Order variables by descending statistic, ties broken by ascending column index.

    Args:
        statistics (np.ndarray): One statistic per column.

    Returns:
        np.ndarray: Column indices, best first.
    """
    statistics = np.asarray(statistics, dtype=float)
    return np.lexsort((np.arange(statistics.size), -statistics))


@dataclasses.dataclass(frozen=True, kw_only=True)
class FilterConfig:
    """Settings of the fused Kolmogorov filter."""

    grid: SliceGrid
    """Slicing schemes fused into the statistic."""
    d_n: int
    """Number of variables to retain."""
    record_per_scheme: bool = False
    """Whether to keep the single-scheme statistics alongside the fused sum."""
    threads: int = 1
    """Worker threads used across column blocks."""
    block_size: int = 256
    """Columns per worker task."""

    def __post_init__(self):
        """Post-creation validation."""
        if self.d_n < 1:
            raise ValueError(f"d_n must be positive, got {self.d_n}")
        if self.block_size < 1:
            raise ValueError(f"block_size must be positive, got {self.block_size}")


@dataclasses.dataclass(frozen=True, kw_only=True)
class VariableScore:
    """Screening statistic of a single variable."""

    index: int
    """Zero-based column index."""
    fused: float
    """The statistic used for ranking; for the filter, the sum of the single-scheme statistics."""
    per_scheme: typing.Optional[tuple[float, ...]] = None
    """Single-scheme statistics, when recorded."""


@dataclasses.dataclass(frozen=True, kw_only=True)
class ScreeningResult:
    """Ranking of all variables and the retained set."""

    statistics: np.ndarray
    """Statistic per column, in column order."""
    ranking: np.ndarray
    """Column indices by descending statistic, ties by ascending index."""
    d_n: int
    """Size of the retained set."""
    method_label: str
    """Method that produced the statistics."""
    per_scheme: typing.Optional[np.ndarray] = None
    """p x N single-scheme statistics, when recorded."""
    G_list: typing.Optional[tuple[int, ...]] = None
    """Slice counts of the recorded schemes."""
    warnings: tuple[str, ...] = ()
    """Non-fatal conditions met while screening."""

    def __post_init__(self):
        """Validate the result."""
        p = self.statistics.size
        if self.d_n > p:
            raise ValueError(f"d_n={self.d_n} exceeds the number of variables p={p}")
        if self.ranking.size != p:
            raise ValueError("ranking does not cover every variable")

    @property
    def p(self) -> int:
        """Number of screened variables."""
        return int(self.statistics.size)

    @property
    def selected(self) -> np.ndarray:
        """The retained columns: the first d_n of the ranking."""
        return self.ranking[: self.d_n]

    @property
    def positions(self) -> np.ndarray:
        """1-based rank position of every column, in column order."""
        positions = np.empty(self.p, dtype=np.int64)
        positions[self.ranking] = np.arange(1, self.p + 1)
        return positions

    @property
    def scores(self) -> list[VariableScore]:
        """Per-variable scores, in ranking order."""
        return [
            VariableScore(
                index=int(j),
                fused=float(self.statistics[j]),
                per_scheme=tuple(float(v) for v in self.per_scheme[j]) if self.per_scheme is not None else None,
            )
            for j in self.ranking
        ]

    @classmethod
    def from_statistics(cls, statistics: np.ndarray, d_n: int, method_label: str, **kwargs) -> "ScreeningResult":
        """Rank statistics into a result.

        Args:
            statistics (np.ndarray): Statistic per column.
            d_n (int): Size of the retained set.
            method_label (str): Method name.

        Returns:
            ScreeningResult: The result.
        """
        statistics = np.asarray(statistics, dtype=float)
        return cls(
            statistics=statistics,
            ranking=rank_by_score(statistics),
            d_n=d_n,
            method_label=method_label,
            **kwargs,
        )

    def single_scheme(self, G: int) -> "ScreeningResult":
        """The ranking produced by one recorded slicing scheme alone.

        Args:
            G (int): Slice count of the scheme.

        Returns:
            ScreeningResult: The single-scheme result, labelled `kolmogorov:G`.
        """
        if self.per_scheme is None or not self.G_list or G not in self.G_list:
            raise ValueError(f"no recorded scheme with G={G}")
        return ScreeningResult.from_statistics(
            self.per_scheme[:, self.G_list.index(G)], d_n=self.d_n, method_label=f"kolmogorov:{G}"
        )
