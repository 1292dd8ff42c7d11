"""Benchmark tables and JSON reports."""
import json
import pandas as pd
import typing

from .core import BenchReport, MethodReport

SKIPPED_CELL = "—"
"""Table cell of a method that was not run."""


def format_cell(report: MethodReport) -> str:
    """Render one table cell as `median (se)`.

    Args:
        report (MethodReport): The method report.

    Returns:
        str: The cell, or `—` for a skipped method.
    """
    if report.is_skipped or report.median is None:
        return SKIPPED_CELL
    return f"{report.median:g} ({report.se:.1f})"


def report_frame(reports: BenchReport | typing.Sequence[BenchReport]) -> pd.DataFrame:
    """Tabulate one or more benchmarks: one row per method, one column per model.

    Args:
        reports (BenchReport | typing.Sequence[BenchReport]): The benchmarks.

    Returns:
        pd.DataFrame: The table of cells, methods in first-seen order.
    """
    if isinstance(reports, BenchReport):
        reports = [reports]
    if not reports:
        raise ValueError("no benchmark to report")

    labels = []
    for report in reports:
        labels.extend(m.label for m in report.methods if m.label not in labels)

    frame = pd.DataFrame({"method": labels})
    for report in reports:
        cells = {m.label: format_cell(m) for m in report.methods}
        frame[f"model {report.model}"] = [cells.get(label, SKIPPED_CELL) for label in labels]
    return frame


def format_table(reports: BenchReport | typing.Sequence[BenchReport]) -> str:
    """Render benchmarks as an aligned plain-text table.

    Args:
        reports (BenchReport | typing.Sequence[BenchReport]): The benchmarks.

    Returns:
        str: The table; cells are `median (se)`.
    """
    return report_frame(reports).to_string(index=False)


def to_json(reports: BenchReport | typing.Sequence[BenchReport], timing: bool = False) -> str:
    """Serialize benchmarks to JSON.

    Args:
        reports (BenchReport | typing.Sequence[BenchReport]): The benchmarks.
        timing (bool, optional): Include runtimes. Defaults to False.

    Returns:
        str: A JSON document with a `reports` list.
    """
    if isinstance(reports, BenchReport):
        reports = [reports]
    return json.dumps({"reports": [r.as_dict(timing=timing) for r in reports]}, indent=2, ensure_ascii=False) + "\n"


def write_json(path: str, reports: BenchReport | typing.Sequence[BenchReport], timing: bool = False):
    """Write benchmarks as JSON.

    Args:
        path (str): Output path.
        reports (BenchReport | typing.Sequence[BenchReport]): The benchmarks.
        timing (bool, optional): Include runtimes. Defaults to False.
    """
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_json(reports, timing=timing))
