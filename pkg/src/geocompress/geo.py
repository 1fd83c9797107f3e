"""Spherical-earth distance primitives shared by the whole package."""

from __future__ import annotations

import math
from dataclasses import dataclass

# Mean Earth radius in kilometres (IUGG). Every distance in this package is
# derived from this one constant; do not introduce a second radius.
EARTH_RADIUS_KM = 6371.0088

# Largest possible great-circle separation: half the sphere's circumference.
MAX_DISTANCE_KM = math.pi * EARTH_RADIUS_KM


@dataclass(frozen=True)
class GeoPoint:
    """A latitude/longitude pair in decimal degrees.

    Range validation happens at ingestion (see :mod:`geocompress.tabular`);
    functions here assume ``lat_deg`` in [-90, 90] and ``lon_deg`` in
    [-180, 180].
    """

    lat_deg: float
    lon_deg: float


@dataclass(frozen=True)
class RadianPoint:
    """The same pair in radians, the unit the metric index works in."""

    lat_rad: float
    lon_rad: float


def to_radians(p: GeoPoint) -> RadianPoint:
    return RadianPoint(math.radians(p.lat_deg), math.radians(p.lon_deg))


def from_radians(p: RadianPoint) -> GeoPoint:
    return GeoPoint(math.degrees(p.lat_rad), math.degrees(p.lon_rad))


def arc_radians(a: RadianPoint, b: RadianPoint) -> float:
    """Central angle between two points, by the haversine formula.

    The asin-of-sqrt form stays accurate for nearby points, which dominate
    this workload (GPS fixes stacked metres apart). The clamp guards the
    sqrt/asin domain against rounding on near-antipodal pairs.
    """
    sin_dlat = math.sin((b.lat_rad - a.lat_rad) * 0.5)
    sin_dlon = math.sin((b.lon_rad - a.lon_rad) * 0.5)
    h = sin_dlat * sin_dlat + math.cos(a.lat_rad) * math.cos(b.lat_rad) * sin_dlon * sin_dlon
    return 2.0 * math.asin(min(1.0, math.sqrt(h)))


def haversine_km(a: RadianPoint, b: RadianPoint) -> float:
    """Great-circle distance in kilometres between two radian points."""
    return EARTH_RADIUS_KM * arc_radians(a, b)


def great_circle_m(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance in metres between two degree points.

    Exactly ``haversine_km(to_radians(a), to_radians(b)) * 1000``; named
    separately because the reduction step states its contract in metres.
    """
    return haversine_km(to_radians(a), to_radians(b)) * 1000.0
