import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geocompress import (
    EARTH_RADIUS_KM,
    MAX_DISTANCE_KM,
    GeoPoint,
    RadianPoint,
    from_radians,
    great_circle_m,
    haversine_km,
    to_radians,
)
from oracles import vincenty_sphere_km

lat_deg = st.floats(min_value=-90.0, max_value=90.0, allow_nan=False)
lon_deg = st.floats(min_value=-180.0, max_value=180.0, allow_nan=False)
geo_points = st.builds(GeoPoint, lat_deg, lon_deg)
radian_points = geo_points.map(to_radians)


class TestRadianConversion:
    def test_origin_is_identity(self):
        assert to_radians(GeoPoint(0.0, 0.0)) == RadianPoint(0.0, 0.0)

    def test_boundary_values_exact(self):
        p = to_radians(GeoPoint(90.0, -180.0))
        assert p.lat_rad == math.pi / 2
        assert p.lon_rad == -math.pi

    def test_against_high_precision_reference(self):
        # frozen from a 40-digit evaluation of value * pi / 180
        p = to_radians(GeoPoint(41.37, 2.15))
        assert abs(p.lat_rad - 0.7220427115500541459733309) < 1e-15
        assert abs(p.lon_rad - 0.03752457891787808590385935) < 1e-15

    @given(geo_points)
    def test_round_trip_within_1e12_degrees(self, p):
        back = from_radians(to_radians(p))
        assert abs(back.lat_deg - p.lat_deg) < 1e-12
        assert abs(back.lon_deg - p.lon_deg) < 1e-12


class TestHaversine:
    def test_identical_points_are_zero(self):
        p = to_radians(GeoPoint(41.37, 2.15))
        assert haversine_km(p, p) == 0.0

    def test_antipodal_is_half_circumference(self):
        d = haversine_km(RadianPoint(0.0, 0.0), RadianPoint(0.0, math.pi))
        assert abs(d - math.pi * EARTH_RADIUS_KM) < 1e-6

    def test_quarter_circle(self):
        d = haversine_km(RadianPoint(0.0, 0.0), RadianPoint(math.pi / 2, 0.0))
        assert abs(d - math.pi / 2 * EARTH_RADIUS_KM) < 1e-6

    def test_matches_independent_oracle_on_random_pairs(self, rng):
        for _ in range(1000):
            lat1, lat2 = rng.uniform(-90.0, 90.0, 2)
            lon1, lon2 = rng.uniform(-180.0, 180.0, 2)
            a = to_radians(GeoPoint(lat1, lon1))
            b = to_radians(GeoPoint(lat2, lon2))
            got = haversine_km(a, b)
            want = vincenty_sphere_km(a.lat_rad, a.lon_rad, b.lat_rad, b.lon_rad)
            assert math.isclose(got, want, rel_tol=1e-9, abs_tol=1e-12)

    @given(radian_points, radian_points)
    def test_symmetric_exactly(self, a, b):
        assert haversine_km(a, b) == haversine_km(b, a)

    @given(radian_points, radian_points)
    def test_non_negative_and_bounded(self, a, b):
        d = haversine_km(a, b)
        assert d >= 0.0
        assert d <= MAX_DISTANCE_KM + 1e-9

    @settings(max_examples=300)
    @given(radian_points, radian_points, radian_points)
    def test_triangle_inequality(self, a, b, c):
        assert haversine_km(a, c) <= haversine_km(a, b) + haversine_km(b, c) + 1e-9

    def test_zero_iff_identical_coordinates(self):
        a = to_radians(GeoPoint(12.5, 77.6))
        b = to_radians(GeoPoint(12.5, 77.6000001))
        assert haversine_km(a, b) > 0.0


class TestGreatCircleMetres:
    def test_zero_for_same_point(self):
        p = GeoPoint(-33.9, 18.4)
        assert great_circle_m(p, p) == 0.0

    def test_half_circumference_in_metres(self):
        d = great_circle_m(GeoPoint(0.0, 0.0), GeoPoint(0.0, 180.0))
        assert abs(d - math.pi * EARTH_RADIUS_KM * 1000.0) < 1e-3

    def test_is_exactly_kilometres_times_1000(self, rng):
        for _ in range(200):
            a = GeoPoint(rng.uniform(-90, 90), rng.uniform(-180, 180))
            b = GeoPoint(rng.uniform(-90, 90), rng.uniform(-180, 180))
            assert great_circle_m(a, b) == haversine_km(to_radians(a), to_radians(b)) * 1000.0
