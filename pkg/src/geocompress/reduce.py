"""Collapse clusters to their centermost members, keeping original records.

The representative of each cluster is the member nearest (great-circle
metres) to the cluster centroid, where the centroid is the plain arithmetic
mean of the member coordinates in degree space. That mean may fall outside a
non-convex cluster; the nearest member is still well defined. Ties resolve
to the lowest original row index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Sequence

import numpy as np

from .balltree import _arc_to_many
from .dbscan import Cluster, group_clusters
from .geo import GeoPoint

if TYPE_CHECKING:
    from .tabular import Dataset


@dataclass(frozen=True)
class ReducedRecord:
    """One cluster's representative row plus provenance."""

    cluster_label: int
    cluster_size: int
    row_index: int
    point: GeoPoint
    attributes: dict[str, str]


@dataclass(frozen=True, eq=False)
class ReducedDataset:
    """Representative records, one per cluster, ordered by cluster label."""

    records: list[ReducedRecord]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[ReducedRecord]:
        return iter(self.records)


@dataclass(frozen=True)
class CompressionReport:
    original_count: int
    reduced_count: int
    compression_pct: float

    def summary(self) -> str:
        return (
            f"{self.original_count} -> {self.reduced_count} points "
            f"({self.compression_pct:.1f}% compression)"
        )


def centroid(member_points: Sequence[GeoPoint]) -> GeoPoint:
    """Arithmetic mean of coordinates in degree space.

    Uses compensated summation so the mean is stable for large clusters of
    near-identical coordinates.
    """
    if len(member_points) == 0:
        raise ValueError("empty cluster")
    n = len(member_points)
    return GeoPoint(
        math.fsum(p.lat_deg for p in member_points) / n,
        math.fsum(p.lon_deg for p in member_points) / n,
    )


def _centermost_row(members: np.ndarray, lats_deg: np.ndarray, lons_deg: np.ndarray) -> int:
    mlat = lats_deg[members]
    mlon = lons_deg[members]
    n = members.size
    c_lat = math.fsum(mlat.tolist()) / n
    c_lon = math.fsum(mlon.tolist()) / n
    dist = _arc_to_many(
        math.radians(c_lat),
        math.radians(c_lon),
        math.cos(math.radians(c_lat)),
        np.radians(mlat),
        np.radians(mlon),
        np.cos(np.radians(mlat)),
    )
    # argmin returns the first minimum; members are ascending, so ties go to
    # the lowest original row index.
    return int(members[int(dist.argmin())])


def centermost_point(cluster: Cluster, dataset: "Dataset") -> int:
    """Original row index of the member nearest the cluster centroid."""
    if cluster.member_rows.size == 0:
        raise ValueError("empty cluster")
    return _centermost_row(cluster.member_rows, dataset.lats, dataset.lons)


def reduce_dataset(dataset: "Dataset", labels: np.ndarray) -> ReducedDataset:
    """One full original record per cluster, ordered by cluster label.

    Attributes travel by original row index, never by coordinate matching,
    so float-equality joins cannot mis-pair rows. Noise rows are dropped.
    """
    labels = np.asarray(labels)
    if len(labels) != len(dataset):
        raise ValueError("labels do not align with dataset rows")
    records = []
    for cluster in group_clusters(labels):
        row = _centermost_row(cluster.member_rows, dataset.lats, dataset.lons)
        records.append(
            ReducedRecord(
                cluster_label=cluster.label,
                cluster_size=cluster.size,
                row_index=row,
                point=dataset.point(row),
                attributes=dataset.attributes(row),
            )
        )
    return ReducedDataset(records)


def compression_report(original_count: int, reduced_count: int) -> CompressionReport:
    """Fraction of rows removed, as a percentage."""
    if original_count < 1:
        raise ValueError("original_count must be >= 1")
    if not (0 <= reduced_count <= original_count):
        raise ValueError("reduced_count must be between 0 and original_count")
    pct = 100.0 * (1.0 - reduced_count / original_count)
    return CompressionReport(original_count, reduced_count, pct)
