import math

import numpy as np
import pytest

from geocompress import EARTH_RADIUS_KM, dataset_from_columns

DEG_PER_KM = math.degrees(1.0) / EARTH_RADIUS_KM


def box_points(rng: np.random.Generator, n: int, lat0=40.0, lon0=-3.0, width_km=100.0):
    """Uniform points in a roughly width_km x width_km box; degrees out."""
    dlat = width_km * DEG_PER_KM
    dlon = width_km * DEG_PER_KM / math.cos(math.radians(lat0))
    lats = rng.uniform(lat0, lat0 + dlat, n)
    lons = rng.uniform(lon0, lon0 + dlon, n)
    return lats, lons


def make_dataset(lats, lons, **attr_columns):
    cols = {name: list(values) for name, values in attr_columns.items()}
    return dataset_from_columns(lats, lons, cols)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
