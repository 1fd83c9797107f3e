"""CSV ingestion and emission for point tables with arbitrary attribute columns.

Coordinate columns are parsed as decimal degrees and range-checked here, at
the single validation chokepoint; everything downstream assumes valid
coordinates. All other columns ride along as opaque strings. Files are
RFC-4180 CSV, UTF-8, LF line endings, header row required.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .geo import GeoPoint
from .reduce import ReducedDataset

PROVENANCE_COLUMNS = ("cluster_label", "cluster_size")


class DatasetError(ValueError):
    """A point table could not be read, validated, or written."""


@dataclass(eq=False)
class Dataset:
    """An ordered, validated point table.

    Coordinates live in parallel arrays for fast math; attributes stay
    columnar. Row indices are positions in file order, 0-based. Immutable by
    convention after load; safe to share across threads.
    """

    column_names: list[str]
    lat_col: str
    lon_col: str
    lats: np.ndarray
    lons: np.ndarray
    attr_columns: dict[str, list[str]] = field(default_factory=dict)

    def __len__(self) -> int:
        return int(self.lats.size)

    def point(self, row: int) -> GeoPoint:
        return GeoPoint(float(self.lats[row]), float(self.lons[row]))

    def attributes(self, row: int) -> dict[str, str]:
        return {name: values[row] for name, values in self.attr_columns.items()}

    def iter_rows(self) -> Iterator[tuple[int, GeoPoint, dict[str, str]]]:
        for i in range(len(self)):
            yield i, self.point(i), self.attributes(i)


def _check_coordinate(lat: float, lon: float, row_num: int) -> None:
    if not (math.isfinite(lat) and -90.0 <= lat <= 90.0):
        raise DatasetError(f"row {row_num}: latitude {lat} out of range [-90, 90]")
    if not (math.isfinite(lon) and -180.0 <= lon <= 180.0):
        raise DatasetError(f"row {row_num}: longitude {lon} out of range [-180, 180]")


def dataset_from_columns(
    lats: Iterable[float],
    lons: Iterable[float],
    attr_columns: dict[str, list[str]] | None = None,
    lat_col: str = "lat",
    lon_col: str = "lon",
    column_names: list[str] | None = None,
) -> Dataset:
    """Assemble and validate a Dataset from already-parsed columns.

    Used by callers that receive points in memory (for example the HTTP
    service) so every entry path shares the same range validation.
    """
    lat_arr = np.asarray(list(lats), dtype=np.float64)
    lon_arr = np.asarray(list(lons), dtype=np.float64)
    if lat_arr.size != lon_arr.size:
        raise DatasetError("latitude and longitude columns differ in length")
    if lat_arr.size == 0:
        raise DatasetError("no data rows")
    attr_columns = dict(attr_columns or {})
    for name, values in attr_columns.items():
        if len(values) != lat_arr.size:
            raise DatasetError(f"attribute column {name!r} differs in length")
    for i in range(lat_arr.size):
        _check_coordinate(float(lat_arr[i]), float(lon_arr[i]), i + 1)
    if column_names is None:
        column_names = [lat_col, lon_col, *attr_columns.keys()]
    return Dataset(
        column_names=column_names,
        lat_col=lat_col,
        lon_col=lon_col,
        lats=lat_arr,
        lons=lon_arr,
        attr_columns=attr_columns,
    )


def _parse_rows(rows: Iterator[list[str]], lat_col: str, lon_col: str, source: str) -> Dataset:
    try:
        header = next(rows)
    except StopIteration:
        raise DatasetError(f"{source}: empty file, header row required") from None
    for required in (lat_col, lon_col):
        if required not in header:
            raise DatasetError(f"{source}: missing required column {required!r}")
    lat_idx = header.index(lat_col)
    lon_idx = header.index(lon_col)
    attr_names = [c for c in header if c != lat_col and c != lon_col]
    attr_idx = [header.index(c) for c in attr_names]

    lats: list[float] = []
    lons: list[float] = []
    attr_values: list[list[str]] = [[] for _ in attr_names]
    row_num = 0
    for row in rows:
        row_num += 1
        if len(row) != len(header):
            raise DatasetError(
                f"{source}: row {row_num}: expected {len(header)} fields, got {len(row)}"
            )
        try:
            lat = float(row[lat_idx])
            lon = float(row[lon_idx])
        except ValueError:
            raise DatasetError(
                f"{source}: row {row_num}: unparsable coordinate "
                f"({lat_col}={row[lat_idx]!r}, {lon_col}={row[lon_idx]!r})"
            ) from None
        try:
            _check_coordinate(lat, lon, row_num)
        except DatasetError as err:
            raise DatasetError(f"{source}: {err}") from None
        lats.append(lat)
        lons.append(lon)
        for store, j in zip(attr_values, attr_idx):
            store.append(row[j])
    if row_num == 0:
        raise DatasetError(f"{source}: no data rows")
    return Dataset(
        column_names=list(header),
        lat_col=lat_col,
        lon_col=lon_col,
        lats=np.asarray(lats, dtype=np.float64),
        lons=np.asarray(lons, dtype=np.float64),
        attr_columns=dict(zip(attr_names, attr_values)),
    )


def read_csv(path, lat_col: str = "lat", lon_col: str = "lon") -> Dataset:
    """Load and validate a point table from a CSV file."""
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            return _parse_rows(csv.reader(f), lat_col, lon_col, str(path))
    except OSError as err:
        raise DatasetError(f"cannot read {path}: {err}") from err


def loads_csv(text: str, lat_col: str = "lat", lon_col: str = "lon", source: str = "<csv>") -> Dataset:
    """Parse a point table from CSV text (same contract as :func:`read_csv`)."""
    return _parse_rows(csv.reader(io.StringIO(text, newline="")), lat_col, lon_col, source)


def _format_coord(value: float) -> str:
    # repr of a float is the shortest string that parses back bit-identical
    return repr(value)


def _write_rows(out, reduced: ReducedDataset, column_names: list[str], lat_col: str, lon_col: str) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([*column_names, *PROVENANCE_COLUMNS])
    for rec in reduced:
        row = []
        for col in column_names:
            if col == lat_col:
                row.append(_format_coord(rec.point.lat_deg))
            elif col == lon_col:
                row.append(_format_coord(rec.point.lon_deg))
            else:
                row.append(rec.attributes.get(col, ""))
        row.append(str(rec.cluster_label))
        row.append(str(rec.cluster_size))
        writer.writerow(row)


def dumps_csv(
    reduced: ReducedDataset,
    column_names: list[str],
    lat_col: str = "lat",
    lon_col: str = "lon",
) -> str:
    """Render a reduced dataset as CSV text: original columns, in order, plus
    ``cluster_label`` and ``cluster_size``."""
    buf = io.StringIO()
    _write_rows(buf, reduced, column_names, lat_col, lon_col)
    return buf.getvalue()


def write_csv(
    reduced: ReducedDataset,
    column_names: list[str],
    path,
    lat_col: str = "lat",
    lon_col: str = "lon",
) -> None:
    """Write a reduced dataset to ``path`` (see :func:`dumps_csv`)."""
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            _write_rows(f, reduced, column_names, lat_col, lon_col)
    except OSError as err:
        raise DatasetError(f"cannot write {path}: {err}") from err
