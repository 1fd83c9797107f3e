"""DBSCAN over geographic points with a physical-distance epsilon.

``eps`` is accepted in kilometres at every public surface and converted to
radians of arc exactly once; neighbourhood counts include the query point
itself, so ``min_samples=1`` clusters every point and produces no noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .balltree import MetricIndex, build_index_arrays
from .geo import EARTH_RADIUS_KM, RadianPoint

NOISE = -1
_UNVISITED = -2


@dataclass(frozen=True)
class DbscanParams:
    """Physical neighbourhood radius and minimum cluster size."""

    eps_km: float
    min_samples: int = 1

    def __post_init__(self):
        if not (math.isfinite(self.eps_km) and self.eps_km > 0.0):
            raise ValueError(f"eps_km must be finite and > 0, got {self.eps_km}")
        if self.min_samples < 1:
            raise ValueError(f"min_samples must be >= 1, got {self.min_samples}")

    @property
    def eps_radians(self) -> float:
        """The epsilon as a central angle: eps_km / Earth radius."""
        return self.eps_km / EARTH_RADIUS_KM


@dataclass(frozen=True, eq=False)
class Cluster:
    """One cluster's label and its member rows in ascending original order."""

    label: int
    member_rows: np.ndarray

    @property
    def size(self) -> int:
        return int(self.member_rows.size)


def label_arrays(
    lat_rad: np.ndarray,
    lon_rad: np.ndarray,
    params: DbscanParams,
    index: MetricIndex | None = None,
) -> np.ndarray:
    """Cluster radian coordinate arrays; returns one label per row.

    Non-noise labels are contiguous from 0 in order of first core-point
    discovery; noise rows get :data:`NOISE`. The scan is deterministic: seeds
    advance in ascending row order and clusters grow FIFO with neighbours
    visited in ascending order, so border points go to whichever cluster's
    expansion reaches them first.
    """
    lat_rad = np.asarray(lat_rad, dtype=np.float64)
    lon_rad = np.asarray(lon_rad, dtype=np.float64)
    if index is None:
        index = build_index_arrays(lat_rad, lon_rad)
    elif (
        index.n != lat_rad.size
        or not np.array_equal(index.lat_rad, lat_rad)
        or not np.array_equal(index.lon_rad, lon_rad)
    ):
        raise ValueError("index does not match point set")

    n = lat_rad.size
    eps_rad = params.eps_radians
    min_samples = params.min_samples
    query = index.query_radius

    labels = np.full(n, _UNVISITED, dtype=np.int64)
    cluster = 0
    for seed in range(n):
        if labels[seed] != _UNVISITED:
            continue
        neigh = query(lat_rad[seed], lon_rad[seed], eps_rad)
        if neigh.size < min_samples:
            labels[seed] = NOISE
            continue
        labels[seed] = cluster
        queue: list[int] = []
        head = 0
        lab_n = labels[neigh]
        fresh = neigh[lab_n == _UNVISITED]
        labels[fresh] = cluster
        labels[neigh[lab_n == NOISE]] = cluster
        queue.extend(fresh.tolist())
        while head < len(queue):
            row = queue[head]
            head += 1
            neigh = query(lat_rad[row], lon_rad[row], eps_rad)
            if neigh.size < min_samples:
                continue  # border point: labelled, never expanded
            lab_n = labels[neigh]
            fresh = neigh[lab_n == _UNVISITED]
            labels[fresh] = cluster
            labels[neigh[lab_n == NOISE]] = cluster
            queue.extend(fresh.tolist())
        cluster += 1
    return labels


def run_dbscan(
    points: Sequence[RadianPoint],
    params: DbscanParams,
    index: MetricIndex | None = None,
) -> np.ndarray:
    """Cluster an ordered sequence of radian points.

    ``index`` must have been built over exactly these points in this order;
    when omitted, one is built internally.
    """
    if len(points) == 0:
        raise ValueError("empty point set")
    lat = np.fromiter((p.lat_rad for p in points), dtype=np.float64, count=len(points))
    lon = np.fromiter((p.lon_rad for p in points), dtype=np.float64, count=len(points))
    return label_arrays(lat, lon, params, index)


def group_clusters(labels: np.ndarray) -> list[Cluster]:
    """Group rows by label, ordered by label, noise rows excluded."""
    labels = np.asarray(labels)
    order = np.argsort(labels, kind="stable")
    sorted_labels = labels[order]
    first = int(np.searchsorted(sorted_labels, 0))
    if first == len(sorted_labels):
        return []
    order = order[first:]
    sorted_labels = sorted_labels[first:]
    cuts = np.flatnonzero(np.diff(sorted_labels)) + 1
    groups = np.split(order, cuts)
    return [Cluster(label=int(labels[g[0]]), member_rows=g) for g in groups]


def noise_count(labels: np.ndarray) -> int:
    return int(np.count_nonzero(np.asarray(labels) == NOISE))
