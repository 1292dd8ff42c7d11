"""Replicated screening benchmarks."""
from .core import BenchConfig, BenchReport, MethodReport
from .metrics import bootstrap_median_se, minimum_model_size
from .runner import run_bench
from .reporting import format_cell, format_table, report_frame, to_json, write_json, SKIPPED_CELL
