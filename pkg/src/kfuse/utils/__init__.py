"""Import utilities."""
from .argparse_helpers import positive_int, non_negative_int, int_list, float_list, str_list
from .core import UsageError, DataFileError, THREADS_ENV, resolve_threads, ordered_map, exit_codes
