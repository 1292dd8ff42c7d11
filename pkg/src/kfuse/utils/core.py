"""Core common utilities."""
import concurrent.futures
import functools
import logging
import os
import typing

THREADS_ENV = "KFUSE_THREADS"
"""Environment variable consulted when no `--threads` flag is given."""

_T = typing.TypeVar("_T")
_R = typing.TypeVar("_R")


class UsageError(ValueError):
    """Invalid command line usage or parameter combination. Maps to exit code 2."""


class DataFileError(ValueError):
    """Malformed input data file. Maps to exit code 1."""

    def __init__(self, message: str, row: int = None, column: str = None):
        """Class constructor.

        Args:
            message (str): Description of the problem.
            row (int, optional): 1-based data row (header excluded) where the problem was found. Defaults to None.
            column (str, optional): Column name where the problem was found. Defaults to None.
        """
        location = []
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column '{column}'")
        super().__init__(f"{message} ({', '.join(location)})" if location else message)
        self.row = row
        self.column = column


def resolve_threads(requested: int | None = None, configured: int = 0) -> int:
    """Resolve the number of worker threads.

    Precedence is the explicit request, then the `KFUSE_THREADS` environment variable, then the configured value.
    Zero means one thread per available core.

    Args:
        requested (int | None, optional): Value from the command line, if any. Defaults to None.
        configured (int, optional): Value from the configuration file. Defaults to 0.

    Raises:
        UsageError: When the resolved value is negative or not an integer.

    Returns:
        int: The number of threads, at least 1.
    """
    value = requested
    if value is None:
        env = os.environ.get(THREADS_ENV)
        if env is not None and env.strip():
            try:
                value = int(env)
            except ValueError:
                raise UsageError(f"{THREADS_ENV} must be an integer, got '{env}'") from None
    if value is None:
        value = configured

    if value < 0:
        raise UsageError(f"thread count must be non-negative, got {value}")

    return value if value > 0 else (os.cpu_count() or 1)


def ordered_map(func: typing.Callable[[_T], _R], items: typing.Sequence[_T], threads: int = 1) -> list[_R]:
    """Apply `func` to every item, optionally on a thread pool.

    Results are returned in the order of `items` regardless of the order in which workers finish.

    Args:
        func (typing.Callable[[_T], _R]): The work function.
        items (typing.Sequence[_T]): The units of work.
        threads (int, optional): Number of worker threads. Defaults to 1.

    Returns:
        list[_R]: One result per item, in item order.
    """
    if threads <= 1 or len(items) < 2:
        return [func(item) for item in items]

    with concurrent.futures.ThreadPoolExecutor(max_workers=min(threads, len(items))) as executor:
        return list(executor.map(func, items))


def exit_codes(execute: typing.Callable[..., int]) -> typing.Callable[..., int]:
    """Decorate a subcommand's `execute`, turning expected failures into exit codes.

    `UsageError` maps to 2; any other `ValueError` and `OSError` map to 1. The message is logged on the
    subcommand's logger. Anything else propagates.

    Args:
        execute (typing.Callable[..., int]): The subcommand entry point.

    Returns:
        typing.Callable[..., int]: The wrapped entry point.
    """

    @functools.wraps(execute)
    def wrapper(args=None) -> int:
        logger = logging.getLogger(execute.__module__)
        try:
            return execute(args)
        except UsageError as e:
            logger.error("%s", e)
            return 2
        except (ValueError, OSError) as e:
            logger.error("%s", e)
            return 1

    return wrapper
