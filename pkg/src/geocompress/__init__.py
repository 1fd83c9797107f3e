"""Compress GPS point tables to spatially representative points.

Pipeline: haversine-metric DBSCAN over a ball-tree index groups nearby rows,
then each cluster collapses to the member nearest its centroid, with the
original row's attributes carried along untouched.
"""

from .balltree import BallTree, LinearScanIndex, MetricIndex, build_index, build_index_arrays, radius_query
from .dbscan import NOISE, Cluster, DbscanParams, group_clusters, label_arrays, run_dbscan
from .geo import (
    EARTH_RADIUS_KM,
    MAX_DISTANCE_KM,
    GeoPoint,
    RadianPoint,
    from_radians,
    great_circle_m,
    haversine_km,
    to_radians,
)
from .pipeline import PipelineResult, compress
from .reduce import (
    CompressionReport,
    ReducedDataset,
    ReducedRecord,
    centermost_point,
    centroid,
    compression_report,
    reduce_dataset,
)
from .svgplot import emit_scatter_svg, render_scatter_svg
from .tabular import Dataset, DatasetError, dataset_from_columns, dumps_csv, loads_csv, read_csv, write_csv

__version__ = "0.1.0"

__all__ = [
    "EARTH_RADIUS_KM",
    "MAX_DISTANCE_KM",
    "NOISE",
    "BallTree",
    "Cluster",
    "CompressionReport",
    "Dataset",
    "DatasetError",
    "DbscanParams",
    "GeoPoint",
    "LinearScanIndex",
    "MetricIndex",
    "PipelineResult",
    "RadianPoint",
    "ReducedDataset",
    "ReducedRecord",
    "build_index",
    "build_index_arrays",
    "centermost_point",
    "centroid",
    "compress",
    "compression_report",
    "dataset_from_columns",
    "dumps_csv",
    "emit_scatter_svg",
    "from_radians",
    "great_circle_m",
    "group_clusters",
    "haversine_km",
    "label_arrays",
    "loads_csv",
    "radius_query",
    "read_csv",
    "reduce_dataset",
    "render_scatter_svg",
    "run_dbscan",
    "to_radians",
    "write_csv",
]
