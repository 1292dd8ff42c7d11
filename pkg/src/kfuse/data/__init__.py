"""Data sets and data files."""
from .core import Dataset, DatasetMetadata
from .io import read_csv, write_csv, read_sidecar, write_sidecar, sidecar_path, RESPONSE_COLUMN
