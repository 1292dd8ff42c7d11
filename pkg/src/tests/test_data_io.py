"""Unit tests for the data package."""
import json
import os

import numpy as np
import pytest

from kfuse.data import Dataset, read_csv, read_sidecar, sidecar_path, write_csv
from kfuse.simgen import ModelSpec, generate
from kfuse.slicing import Response, ResponseKind
from kfuse.utils import DataFileError


def _write(path, text):
    with open(path, "w") as f:
        f.write(text)
    return str(path)


def test_round_trip_with_sidecar(tmp_path):
    """A written data set reads back with its active set and response type."""
    data = generate(ModelSpec(id="6", n=30, p=4, seed=11))
    path = str(tmp_path / "model6.csv")
    write_csv(path, data, seed=11, replicate=None)

    assert os.path.exists(sidecar_path(path))
    loaded = read_csv(path)
    assert loaded.kind is ResponseKind.COUNT
    assert loaded.truth == (0, 1)
    assert loaded.label == "6"
    assert loaded.names == ("x1", "x2", "x3", "x4")
    assert np.allclose(loaded.X, data.X, rtol=1e-15, atol=0)
    assert np.array_equal(loaded.resp.values, data.resp.values)


def test_sidecar_schema(tmp_path):
    """The sidecar stores 1-based truth and the generating seed."""
    data = generate(ModelSpec(id="7", n=20, p=12, seed=4))
    path = str(tmp_path / "model7.csv")
    write_csv(path, data, seed=4, replicate=2)

    with open(sidecar_path(path)) as f:
        raw = json.load(f)
    assert raw["truth"] == list(range(1, 11))
    assert raw["seed"] == 4
    assert raw["replicate"] == 2
    assert raw["response_kind"] == "categorical"
    assert raw["levels"] == 5

    metadata = read_sidecar(sidecar_path(path))
    assert metadata.truth == tuple(range(10))


def test_sidecar_path():
    """The sidecar sits next to the data file."""
    assert sidecar_path("out/data.csv") == "out/data.json"


def test_small_file_without_sidecar(tmp_path):
    """Plain files default to a continuous response and header names."""
    path = _write(tmp_path / "small.csv", "y,a\n1.5,2\n2.5,3\n0.5,1\n")
    data = read_csv(path)
    assert (data.n, data.p) == (3, 1)
    assert data.kind is ResponseKind.CONTINUOUS
    assert data.names == ("a",)
    assert data.truth == ()
    assert data.label == "small"


def test_response_column_anywhere(tmp_path):
    """The response may be any column, by name or position."""
    path = _write(tmp_path / "d.csv", "x1,target,x2\n1,10,4\n2,20,5\n3,30,6\n")
    by_name = read_csv(path, response_column="target")
    by_index = read_csv(path, response_column=1)
    assert by_name.names == ("x1", "x2")
    assert list(by_name.resp.values) == [10.0, 20.0, 30.0]
    assert np.array_equal(by_name.X, by_index.X)


def test_missing_cell_names_row_and_column(tmp_path):
    """A missing cell is reported with its row and column."""
    path = _write(tmp_path / "d.csv", "y,x1\n1,2\n3,\n4,5\n")
    with pytest.raises(DataFileError, match="row 2") as e:
        read_csv(path)
    assert e.value.column == "x1"
    assert "missing value" in str(e.value)


def test_non_numeric_cell(tmp_path):
    """Text in a numeric column is reported."""
    path = _write(tmp_path / "d.csv", "y,x1\n1,2\n3,abc\n")
    with pytest.raises(DataFileError, match="non-numeric"):
        read_csv(path)


def test_categorical_levels(tmp_path):
    """Categorical responses must be 1..G."""
    path = _write(tmp_path / "d.csv", "y,x1\n0,2\n1,3\n2,4\n")
    with pytest.raises(DataFileError, match="levels must be 1..G"):
        read_csv(path, response_kind="categorical")
    path = _write(tmp_path / "e.csv", "y,x1\n3,2\n1,3\n2,4\n")
    with pytest.raises(DataFileError, match="levels must be 1..G"):
        read_csv(path, response_kind="categorical", levels=2)
    assert read_csv(path, response_kind="categorical").resp.levels == 3


def test_count_values(tmp_path):
    """Count responses must be non-negative integers."""
    path = _write(tmp_path / "d.csv", "y,x1\n1.5,2\n1,3\n")
    with pytest.raises(DataFileError, match="integers"):
        read_csv(path, response_kind="count")
    path = _write(tmp_path / "e.csv", "y,x1\n-1,2\n1,3\n")
    with pytest.raises(DataFileError, match="non-negative"):
        read_csv(path, response_kind="count")


def test_unknown_response_column(tmp_path):
    """An unknown response name is reported."""
    path = _write(tmp_path / "d.csv", "y,x1\n1,2\n3,4\n")
    with pytest.raises(DataFileError, match="unknown response column"):
        read_csv(path, response_column="z")


def test_ragged_row(tmp_path):
    """A row with extra fields is malformed."""
    path = _write(tmp_path / "d.csv", "y,x1\n1,2\n3,4,5\n")
    with pytest.raises(DataFileError, match="malformed"):
        read_csv(path)


def test_empty_file(tmp_path):
    """An empty file is reported."""
    with pytest.raises(DataFileError, match="empty"):
        read_csv(_write(tmp_path / "d.csv", ""))


def test_dataset_validation():
    """Data sets need finite covariates and in-range truth."""
    resp = Response(kind="continuous", values=[1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        Dataset(X=np.ones((2, 2)), resp=resp)
    with pytest.raises(ValueError):
        Dataset(X=np.array([[1.0], [np.inf], [2.0]]), resp=resp)
    with pytest.raises(ValueError):
        Dataset(X=np.ones((3, 2)), resp=resp, truth=(2,))
    assert Dataset(X=np.ones((3, 2)), resp=resp).names == ("x1", "x2")
