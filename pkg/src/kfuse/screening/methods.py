"""Screening method selection shared by the command line tools and the benchmark."""
import dataclasses
import typing

import numpy as np

from ..slicing import Response, ResponseKind, SliceGrid, build_grid
from ..utils import UsageError
from .baselines import BaselineMethod, dcs_screen, rcs_screen, sis_screen
from .core import FilterConfig, ScreeningResult
from .kfilter import screen

FUSED = "fused"
KOLMOGOROV = "kolmogorov"


@dataclasses.dataclass(frozen=True)
class MethodSpec:
    """A screening method: `fused`, `kolmogorov:G`, `sis`, `rcs` or `dcs`."""

    kind: str
    """Method family."""
    G: typing.Optional[int] = None
    """Slice count of a single-scheme Kolmogorov filter."""

    @property
    def label(self) -> str:
        """The method label used in reports."""
        return f"{self.kind}:{self.G}" if self.G is not None else self.kind

    def __str__(self) -> str:
        """The method label."""
        return self.label

    @classmethod
    def parse(cls, value: str) -> "MethodSpec":
        """Parse a method label.

        Args:
            value (str): The label, e.g. `fused` or `kolmogorov:4`.

        Raises:
            UsageError: On an unknown method.

        Returns:
            MethodSpec: The method.
        """
        text = value.strip().lower()
        if text == FUSED:
            return cls(FUSED)
        if text.startswith(KOLMOGOROV):
            _, _, g = text.partition(":")
            try:
                G = int(g)
            except ValueError:
                raise UsageError(f"'{value}' needs a slice count, e.g. kolmogorov:3") from None
            if G < 2:
                raise UsageError(f"'{value}' needs at least 2 slices")
            return cls(KOLMOGOROV, G)
        try:
            return cls(BaselineMethod(text).value)
        except ValueError:
            raise UsageError(f"unknown screening method '{value}'") from None

    def check_applicable(self, kind: ResponseKind):
        """Reject method and response combinations that make no sense.

        Args:
            kind (ResponseKind): The response type.

        Raises:
            UsageError: When the method cannot screen this response type.
        """
        if self.kind in (BaselineMethod.SIS.value, BaselineMethod.RCS.value) and kind is not ResponseKind.CONTINUOUS:
            raise UsageError(f"{self.kind} requires continuous response")
        if self.kind == KOLMOGOROV and kind is ResponseKind.CATEGORICAL:
            raise UsageError(
                "kolmogorov:G slices by quantiles; a categorical response is sliced by level with 'fused'"
            )

    @property
    def uses_slices(self) -> bool:
        """Whether the method slices the response."""
        return self.kind in (FUSED, KOLMOGOROV)

    def grid(
        self, resp: Response, slices: typing.Optional[typing.Sequence[int]] = None, min_slices: int = 3
    ) -> SliceGrid:
        """Build the slicing grid of a Kolmogorov method.

        Args:
            resp (Response): The response.
            slices (typing.Optional[typing.Sequence[int]], optional): Grid of the fused filter. Defaults to the
                default grid.
            min_slices (int, optional): Smallest scheme of the default grid. Defaults to 3.

        Raises:
            ValueError: When the slice counts do not fit the response.

        Returns:
            SliceGrid: The grid; `kolmogorov:G` always uses the single scheme G.
        """
        return build_grid(resp, [self.G] if self.kind == KOLMOGOROV else slices, min_slices=min_slices)


def run_method(
    method: MethodSpec,
    X: np.ndarray,
    resp: Response,
    d_n: int,
    slices: typing.Optional[typing.Sequence[int]] = None,
    min_slices: int = 3,
    threads: int = 1,
    block_size: int = 256,
) -> ScreeningResult:
    """Screen with one method.

    Args:
        method (MethodSpec): The method.
        X (np.ndarray): The n x p covariates.
        resp (Response): The response.
        d_n (int): Number of variables to retain.
        slices (typing.Optional[typing.Sequence[int]], optional): Slicing grid of the fused filter. Defaults to
            the 3..ceil(ln n) grid.
        min_slices (int, optional): Smallest scheme of the default grid. Defaults to 3.
        threads (int, optional): Worker threads. Defaults to 1.
        block_size (int, optional): Columns per task. Defaults to 256.

    Returns:
        ScreeningResult: The ranking.
    """
    method.check_applicable(resp.kind)

    if method.uses_slices:
        grid = method.grid(resp, slices, min_slices=min_slices)
        result = screen(X, resp, FilterConfig(grid=grid, d_n=d_n, threads=threads, block_size=block_size))
        return dataclasses.replace(result, method_label=method.label)

    baseline = BaselineMethod(method.kind)
    if baseline is BaselineMethod.SIS:
        return sis_screen(X, resp, d_n)
    if baseline is BaselineMethod.RCS:
        return rcs_screen(X, resp, d_n, threads=threads, block_size=block_size)
    return dcs_screen(X, resp, d_n, threads=threads, block_size=block_size)
