"""Unit tests for the utils package."""
import argparse
import os
import threading
import time

import pytest

from kfuse.utils import (
    DataFileError,
    THREADS_ENV,
    UsageError,
    exit_codes,
    float_list,
    int_list,
    non_negative_int,
    ordered_map,
    positive_int,
    resolve_threads,
    str_list,
)


def test_resolve_threads_precedence(monkeypatch):
    """The flag wins over the environment, which wins over the configuration."""
    monkeypatch.setenv(THREADS_ENV, "3")
    assert resolve_threads(2, 5) == 2
    assert resolve_threads(None, 5) == 3
    monkeypatch.delenv(THREADS_ENV)
    assert resolve_threads(None, 5) == 5
    assert resolve_threads(None, 0) == (os.cpu_count() or 1)


def test_resolve_threads_invalid(monkeypatch):
    """Negative or non-integer values are usage errors."""
    monkeypatch.setenv(THREADS_ENV, "many")
    with pytest.raises(UsageError):
        resolve_threads()
    with pytest.raises(UsageError):
        resolve_threads(-1)


def test_ordered_map_keeps_order():
    """Results come back in item order however the workers finish."""

    def slow_first(i: int) -> tuple[int, str]:
        time.sleep(0.01 * (5 - i))
        return i, threading.current_thread().name

    results = ordered_map(slow_first, list(range(5)), threads=4)
    assert [i for i, _ in results] == [0, 1, 2, 3, 4]
    assert ordered_map(lambda i: i * i, [1, 2, 3]) == [1, 4, 9]
    assert ordered_map(lambda i: i, []) == []


def test_data_file_error_location():
    """Messages carry the row and column of the problem."""
    e = DataFileError("missing value", row=2, column="x1")
    assert str(e) == "missing value (row 2, column 'x1')"
    assert (e.row, e.column) == (2, "x1")
    assert str(DataFileError("empty data file")) == "empty data file"
    assert isinstance(e, ValueError)


def test_float_list_repetition():
    """`v*k` repeats a value."""
    assert float_list("0.8*3,-1") == [0.8, 0.8, 0.8, -1.0]
    assert float_list("1,2,") == [1.0, 2.0]
    with pytest.raises(argparse.ArgumentTypeError):
        float_list("a,b")


def test_integer_arguments():
    """Integer argument types validate their range."""
    assert int_list("3,4,5") == [3, 4, 5]
    assert positive_int("4") == 4
    assert non_negative_int("0") == 0
    assert str_list(" fused, sis ,") == ["fused", "sis"]
    with pytest.raises(argparse.ArgumentTypeError):
        positive_int("0")
    with pytest.raises(argparse.ArgumentTypeError):
        non_negative_int("-1")
    with pytest.raises(argparse.ArgumentTypeError):
        int_list("3,x")


def test_exit_codes(caplog):
    """Usage errors exit 2, other expected failures exit 1."""

    @exit_codes
    def execute(args=None) -> int:
        if args == "usage":
            raise UsageError("bad flag")
        if args == "data":
            raise DataFileError("bad cell", row=1)
        if args == "io":
            raise FileNotFoundError("no such file")
        if args == "bug":
            raise KeyError("bug")
        return 0

    assert execute() == 0
    assert execute("usage") == 2
    assert execute("data") == 1
    assert execute("io") == 1
    assert "bad flag" in caplog.text
    with pytest.raises(KeyError):
        execute("bug")
