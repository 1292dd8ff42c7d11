"""CSV data files and their JSON sidecars.

A data file is a rectangular CSV with a header row. Simulated files put the response first, `y,x1,...,xp`.
Values are written at full precision so that reading a written file reproduces the data exactly.

The sidecar sits next to the data file with a `.json` suffix:

    {"model": "2a", "seed": 42, "replicate": null, "n": 200, "p": 5000, "truth": [1, 2, ...],
     "response_kind": "continuous", "levels": null}

`truth` lists 1-based covariate numbers counted in the order the covariates appear in the file.
"""
import json
import logging
import math
import numpy as np
import os
import pandas as pd
import typing

from .core import Dataset, DatasetMetadata
from ..slicing import Response, ResponseKind
from ..utils import DataFileError

RESPONSE_COLUMN = "y"
"""Name of the response column in written files."""


def sidecar_path(path: str) -> str:
    """The sidecar file belonging to a data file: the same path with a `.json` suffix.

    Args:
        path (str): Data file path.

    Returns:
        str: Sidecar path.
    """
    return os.path.splitext(path)[0] + ".json"


def write_sidecar(path: str, metadata: DatasetMetadata):
    """Write a sidecar file.

    Args:
        path (str): The sidecar path.
        metadata (DatasetMetadata): The description to record.
    """
    record = {
        "model": metadata.model,
        "seed": metadata.seed,
        "replicate": metadata.replicate,
        "n": metadata.n,
        "p": metadata.p,
        "truth": [j + 1 for j in metadata.truth],
        "response_kind": metadata.response_kind.value,
        "levels": metadata.levels,
    }
    with open(path, "w") as f:
        json.dump(record, f, indent=2)
        f.write("\n")


def read_sidecar(path: str) -> DatasetMetadata:
    """Read a sidecar file.

    Args:
        path (str): The sidecar path.

    Raises:
        DataFileError: When the file is not valid sidecar JSON.

    Returns:
        DatasetMetadata: The description.
    """
    try:
        with open(path, "r") as f:
            record = json.load(f)
        truth = record.get("truth") or []
        if any(int(j) < 1 for j in truth):
            raise ValueError("truth entries are 1-based")
        return DatasetMetadata(
            model=str(record.get("model", "")),
            response_kind=record.get("response_kind", ResponseKind.CONTINUOUS.value),
            n=record.get("n"),
            p=record.get("p"),
            seed=record.get("seed"),
            replicate=record.get("replicate"),
            truth=tuple(int(j) - 1 for j in truth),
            levels=record.get("levels"),
        )
    except (json.JSONDecodeError, TypeError, ValueError, AttributeError) as e:
        raise DataFileError(f"invalid sidecar file {path}: {e}") from None


def write_csv(
    path: str,
    dataset: Dataset,
    seed: typing.Optional[int] = None,
    replicate: typing.Optional[int] = None,
    sidecar: bool = True,
):
    """Write a data set with the response first, `y,x1,...,xp`, and optionally its sidecar.

    Args:
        path (str): Output path.
        dataset (Dataset): The data set.
        seed (typing.Optional[int], optional): Generating seed recorded in the sidecar. Defaults to None.
        replicate (typing.Optional[int], optional): Replicate index recorded in the sidecar. Defaults to None.
        sidecar (bool, optional): Whether to write the sidecar. Defaults to True.
    """
    frame = pd.DataFrame(dataset.X, columns=list(dataset.names))
    frame.insert(0, RESPONSE_COLUMN, dataset.resp.values)
    frame.to_csv(path, index=False)

    if sidecar:
        write_sidecar(sidecar_path(path), DatasetMetadata.of(dataset, seed=seed, replicate=replicate))

    logging.getLogger(__name__).info("wrote %d x %d data set to %s", dataset.n, dataset.p, path)


def _is_missing(cell: typing.Any) -> bool:
    return cell is None or (isinstance(cell, float) and math.isnan(cell)) or not str(cell).strip()


def _parse_reals(name: str, cells: list) -> np.ndarray:
    try:
        values = np.array(cells, dtype=float)
        if np.all(np.isfinite(values)):
            return values
    except (TypeError, ValueError):
        pass

    for row, cell in enumerate(cells, start=1):
        if _is_missing(cell):
            raise DataFileError("missing value", row=row, column=name)
        try:
            value = float(cell)
        except ValueError:
            raise DataFileError(f"non-numeric value '{cell}'", row=row, column=name) from None
        if not math.isfinite(value):
            raise DataFileError(f"non-finite value '{cell}'", row=row, column=name)
    raise DataFileError("unparseable column", column=name)


def _parse_integers(name: str, cells: list, kind: ResponseKind) -> np.ndarray:
    values = np.empty(len(cells), dtype=np.int64)
    for row, cell in enumerate(cells, start=1):
        if _is_missing(cell):
            raise DataFileError("missing value", row=row, column=name)
        try:
            values[row - 1] = int(str(cell).strip())
        except ValueError:
            raise DataFileError(
                f"{kind.value} response values must be integers, got '{cell}'", row=row, column=name
            ) from None
    return values


def _resolve_column(columns: list[str], response_column: str | int) -> int:
    if isinstance(response_column, int):
        if not 0 <= response_column < len(columns):
            raise DataFileError(f"response column index {response_column} out of range")
        return response_column
    if response_column in columns:
        return columns.index(response_column)
    raise DataFileError(f"unknown response column '{response_column}'")


def read_csv(
    path: str,
    response_column: str | int = RESPONSE_COLUMN,
    response_kind: typing.Optional[ResponseKind | str] = None,
    levels: typing.Optional[int] = None,
) -> Dataset:
    """Read a data file.

    Every column other than the response is a covariate, in file order. When a sidecar exists it supplies the
    active set, the label, the number of levels and, unless `response_kind` is given, the response type.

    Args:
        path (str): The CSV path.
        response_column (str | int, optional): Response column name, or zero-based position. Defaults to "y".
        response_kind (typing.Optional[ResponseKind | str], optional): Response type. Defaults to the
        sidecar's, or continuous.
        levels (typing.Optional[int], optional): Number of categories. Defaults to the sidecar's, or the
        largest observed level.

    Raises:
        DataFileError: When a cell is missing or not numeric, a row is ragged, the response column is unknown or
        the response values do not fit the response type.

    Returns:
        Dataset: The data set.
    """
    logger = logging.getLogger(__name__)

    metadata = None
    if os.path.exists(sidecar_path(path)):
        metadata = read_sidecar(sidecar_path(path))
        logger.info("using sidecar %s", sidecar_path(path))

    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, na_filter=False)
    except pd.errors.ParserError as e:
        raise DataFileError(f"malformed data file {path}: {e}") from None
    except pd.errors.EmptyDataError:
        raise DataFileError(f"empty data file {path}") from None

    columns = [str(c) for c in frame.columns]
    target = _resolve_column(columns, response_column)
    if len(columns) < 2:
        raise DataFileError("data file needs a response and at least one covariate column")
    if len(frame) < 2:
        raise DataFileError("data file needs at least 2 rows")

    kind = ResponseKind(response_kind or (metadata.response_kind if metadata else ResponseKind.CONTINUOUS))
    if levels is None and metadata is not None:
        levels = metadata.levels

    covariates = [j for j in range(len(columns)) if j != target]
    X = np.column_stack([_parse_reals(columns[j], frame.iloc[:, j].tolist()) for j in covariates])

    cells = frame.iloc[:, target].tolist()
    name = columns[target]
    if kind is ResponseKind.CONTINUOUS:
        y = _parse_reals(name, cells)
    else:
        y = _parse_integers(name, cells, kind)
        bad = np.flatnonzero(y < 0) if kind is ResponseKind.COUNT else np.flatnonzero(y < 1)
        if bad.size and kind is ResponseKind.COUNT:
            raise DataFileError("count response values must be non-negative", row=int(bad[0]) + 1, column=name)
        if bad.size:
            raise DataFileError(f"levels must be 1..G, got {y[bad[0]]}", row=int(bad[0]) + 1, column=name)
        if kind is ResponseKind.CATEGORICAL and levels is not None and np.any(y > levels):
            row = int(np.flatnonzero(y > levels)[0]) + 1
            raise DataFileError(f"levels must be 1..G (G={levels})", row=row, column=name)

    try:
        resp = Response(kind=kind, values=y, levels=levels if kind is ResponseKind.CATEGORICAL else None)
        dataset = Dataset(
            X=X,
            resp=resp,
            truth=metadata.truth if metadata else (),
            label=metadata.model if metadata else os.path.splitext(os.path.basename(path))[0],
            names=tuple(columns[j] for j in covariates),
        )
    except ValueError as e:
        raise DataFileError(f"{path}: {e}") from None

    logger.info("loaded %s: n=%d p=%d response=%s", path, dataset.n, dataset.p, kind.value)
    return dataset
