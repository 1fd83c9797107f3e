"""Ball-tree metric index for exact radius queries under the haversine metric.

Distances inside the tree are central angles (radians of arc); callers
convert physical radii by dividing by :data:`geocompress.geo.EARTH_RADIUS_KM`
at the boundary, so the pruning tests never touch the Earth radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

from .geo import RadianPoint

DEFAULT_LEAF_CAPACITY = 32

# Below this many points a flat vectorised scan beats the tree.
LINEAR_SCAN_THRESHOLD = 64

# Pruning slack in radians of arc (~6 cm on Earth). Node balls whose boundary
# falls within this band of the query radius are neither pruned nor taken
# wholesale; they descend to exact per-point checks. The band exceeds the
# worst-case haversine rounding error (asin amplification near antipodal
# arcs included), so query results stay identical, as sets, to a brute-force
# filter of the same per-point distances.
_PRUNE_SLACK = 1e-5


def _arc_to_many(
    lat: float,
    lon: float,
    cos_lat: float,
    lats: np.ndarray,
    lons: np.ndarray,
    cos_lats: np.ndarray,
) -> np.ndarray:
    """Central angles from one point to arrays of points (haversine form).

    Operation order mirrors :func:`geocompress.geo.arc_radians` so scalar and
    vectorised paths round identically.
    """
    sin_dlat = np.sin((lats - lat) * 0.5)
    sin_dlon = np.sin((lons - lon) * 0.5)
    h = sin_dlat * sin_dlat + cos_lat * cos_lats * sin_dlon * sin_dlon
    np.clip(h, 0.0, 1.0, out=h)
    return 2.0 * np.arcsin(np.sqrt(h))


def _as_radian_arrays(lat_rad, lon_rad) -> tuple[np.ndarray, np.ndarray]:
    lat = np.ascontiguousarray(lat_rad, dtype=np.float64)
    lon = np.ascontiguousarray(lon_rad, dtype=np.float64)
    if lat.ndim != 1 or lat.shape != lon.shape:
        raise ValueError("latitude and longitude arrays must be 1-D and equal length")
    if lat.size == 0:
        raise ValueError("empty point set")
    return lat, lon


@dataclass(frozen=True)
class BallNode:
    """Read-only view of one tree node, for inspection and audits."""

    start: int
    end: int
    left: int
    right: int
    pivot: RadianPoint
    radius: float

    @property
    def is_leaf(self) -> bool:
        return self.left < 0


class BallTree:
    """Hierarchical pivot-and-radius index over radian coordinates.

    Each node covers a contiguous slice of a permutation of the input rows
    and stores a pivot (the coordinate mean of its members) plus the largest
    central angle from that pivot to any member. Queries prune on the
    triangle inequality and do exact vectorised checks at the leaves.

    Splits follow a metric-only heuristic: take the point farthest from the
    slice's first point, then the point farthest from that one, and send
    every member to whichever of the two is nearer. Degenerate slices
    (for example, stacks of identical coordinates) are halved positionally.

    Instances are immutable after construction and safe for concurrent
    queries.
    """

    def __init__(self, lat_rad, lon_rad, leaf_capacity: int = DEFAULT_LEAF_CAPACITY):
        if leaf_capacity < 1:
            raise ValueError("leaf_capacity must be >= 1")
        lat, lon = _as_radian_arrays(lat_rad, lon_rad)
        self.leaf_capacity = int(leaf_capacity)
        self.n = int(lat.size)
        self.lat_rad = lat
        self.lon_rad = lon
        cos_all = np.cos(lat)

        perm = np.arange(self.n, dtype=np.intp)
        starts: list[int] = []
        ends: list[int] = []
        lefts: list[int] = []
        rights: list[int] = []
        pivot_lat: list[float] = []
        pivot_lon: list[float] = []
        pivot_cos: list[float] = []
        radii: list[float] = []

        # (start, end, parent node id, is parent's left child)
        stack: list[tuple[int, int, int, bool]] = [(0, self.n, -1, False)]
        while stack:
            start, end, parent, is_left = stack.pop()
            nid = len(starts)
            if parent >= 0:
                if is_left:
                    lefts[parent] = nid
                else:
                    rights[parent] = nid

            members = perm[start:end]
            mlat = lat[members]
            mlon = lon[members]
            mcos = cos_all[members]
            pv_lat = float(mlat.mean())
            pv_lon = float(mlon.mean())
            pv_cos = math.cos(pv_lat)
            radius = float(_arc_to_many(pv_lat, pv_lon, pv_cos, mlat, mlon, mcos).max())

            starts.append(start)
            ends.append(end)
            pivot_lat.append(pv_lat)
            pivot_lon.append(pv_lon)
            pivot_cos.append(pv_cos)
            radii.append(radius)

            if end - start <= self.leaf_capacity:
                lefts.append(-1)
                rights.append(-1)
                continue

            d0 = _arc_to_many(float(mlat[0]), float(mlon[0]), float(mcos[0]), mlat, mlon, mcos)
            i1 = int(d0.argmax())
            d1 = _arc_to_many(float(mlat[i1]), float(mlon[i1]), float(mcos[i1]), mlat, mlon, mcos)
            i2 = int(d1.argmax())
            d2 = _arc_to_many(float(mlat[i2]), float(mlon[i2]), float(mcos[i2]), mlat, mlon, mcos)
            near_first = d1 <= d2
            k = int(near_first.sum())
            if 0 < k < members.size:
                perm[start:end] = np.concatenate((members[near_first], members[~near_first]))
                mid = start + k
            else:
                mid = start + members.size // 2
            lefts.append(-2)  # patched when the child is popped
            rights.append(-2)
            stack.append((mid, end, nid, False))
            stack.append((start, mid, nid, True))

        self._perm = perm
        self._plat = lat[perm]
        self._plon = lon[perm]
        self._pcos = cos_all[perm]
        # Hot-loop node fields as plain lists: scalar indexing beats ndarray.
        self._nstart = starts
        self._nend = ends
        self._nleft = lefts
        self._nright = rights
        self._npivot_lat = pivot_lat
        self._npivot_lon = pivot_lon
        self._npivot_cos = pivot_cos
        self._nradius = radii
        for arr in (self.lat_rad, self.lon_rad, self._perm, self._plat, self._plon, self._pcos):
            arr.setflags(write=False)

    @property
    def num_nodes(self) -> int:
        return len(self._nstart)

    @property
    def permutation(self) -> np.ndarray:
        """Row indices in tree order; node slices index into this."""
        return self._perm

    def nodes(self) -> Iterator[BallNode]:
        """Yield every node for structural audits."""
        for i in range(self.num_nodes):
            yield BallNode(
                start=self._nstart[i],
                end=self._nend[i],
                left=self._nleft[i],
                right=self._nright[i],
                pivot=RadianPoint(self._npivot_lat[i], self._npivot_lon[i]),
                radius=self._nradius[i],
            )

    def query_radius(self, lat_rad: float, lon_rad: float, radius_rad: float) -> np.ndarray:
        """Row indices of all points within ``radius_rad`` arc of the center.

        The boundary is inclusive (``<=``). Result is sorted ascending.
        """
        if radius_rad < 0.0:
            raise ValueError("radius must be >= 0")
        nstart = self._nstart
        nend = self._nend
        nleft = self._nleft
        nright = self._nright
        pv_lat = self._npivot_lat
        pv_lon = self._npivot_lon
        pv_cos = self._npivot_cos
        nradius = self._nradius
        perm = self._perm
        cos_q = math.cos(lat_rad)
        inner = radius_rad - _PRUNE_SLACK
        outer = radius_rad + _PRUNE_SLACK

        hits: list[np.ndarray] = []
        stack = [0]
        while stack:
            i = stack.pop()
            sin_dlat = math.sin((pv_lat[i] - lat_rad) * 0.5)
            sin_dlon = math.sin((pv_lon[i] - lon_rad) * 0.5)
            h = sin_dlat * sin_dlat + cos_q * pv_cos[i] * sin_dlon * sin_dlon
            d = 2.0 * math.asin(min(1.0, math.sqrt(h)))
            r = nradius[i]
            if d - r > outer:
                continue
            s = nstart[i]
            e = nend[i]
            if d + r <= inner:
                hits.append(perm[s:e])
                continue
            left = nleft[i]
            if left < 0:
                dist = _arc_to_many(
                    lat_rad, lon_rad, cos_q, self._plat[s:e], self._plon[s:e], self._pcos[s:e]
                )
                sel = np.flatnonzero(dist <= radius_rad)
                if sel.size:
                    hits.append(perm[s:e][sel])
            else:
                stack.append(nright[i])
                stack.append(left)

        if not hits:
            return np.empty(0, dtype=np.intp)
        result = np.concatenate(hits)
        result.sort()
        return result


class LinearScanIndex:
    """Brute-force index with the same query contract as :class:`BallTree`.

    Kept alongside the tree as the fallback for tiny point sets, where one
    vectorised pass over everything is faster than tree bookkeeping.
    """

    def __init__(self, lat_rad, lon_rad):
        lat, lon = _as_radian_arrays(lat_rad, lon_rad)
        self.n = int(lat.size)
        self.lat_rad = lat
        self.lon_rad = lon
        self._cos = np.cos(lat)
        for arr in (self.lat_rad, self.lon_rad, self._cos):
            arr.setflags(write=False)

    def query_radius(self, lat_rad: float, lon_rad: float, radius_rad: float) -> np.ndarray:
        if radius_rad < 0.0:
            raise ValueError("radius must be >= 0")
        dist = _arc_to_many(lat_rad, lon_rad, math.cos(lat_rad), self.lat_rad, self.lon_rad, self._cos)
        return np.flatnonzero(dist <= radius_rad)


MetricIndex = Union[BallTree, LinearScanIndex]


def build_index_arrays(lat_rad, lon_rad, leaf_capacity: int = DEFAULT_LEAF_CAPACITY) -> MetricIndex:
    """Build the appropriate index for radian coordinate arrays."""
    lat, lon = _as_radian_arrays(lat_rad, lon_rad)
    if lat.size < LINEAR_SCAN_THRESHOLD:
        return LinearScanIndex(lat, lon)
    return BallTree(lat, lon, leaf_capacity=leaf_capacity)


def build_index(points: Sequence[RadianPoint], leaf_capacity: int = DEFAULT_LEAF_CAPACITY) -> MetricIndex:
    """Build an index over an ordered sequence of radian points."""
    if len(points) == 0:
        raise ValueError("empty point set")
    lat = np.fromiter((p.lat_rad for p in points), dtype=np.float64, count=len(points))
    lon = np.fromiter((p.lon_rad for p in points), dtype=np.float64, count=len(points))
    return build_index_arrays(lat, lon, leaf_capacity=leaf_capacity)


def radius_query(index: MetricIndex, center: RadianPoint, radius_rad: float) -> np.ndarray:
    """All indexed rows within ``radius_rad`` arc of ``center`` (inclusive)."""
    return index.query_radius(center.lat_rad, center.lon_rad, radius_rad)
