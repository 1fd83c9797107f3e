"""End-to-end compression: cluster a point table, keep one row per cluster."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .balltree import DEFAULT_LEAF_CAPACITY, build_index_arrays
from .dbscan import Cluster, DbscanParams, group_clusters, label_arrays, noise_count
from .reduce import CompressionReport, ReducedDataset, compression_report, reduce_dataset
from .tabular import Dataset


@dataclass(frozen=True, eq=False)
class PipelineResult:
    labels: np.ndarray
    clusters: list[Cluster]
    reduced: ReducedDataset
    report: CompressionReport
    noise_count: int

    @property
    def cluster_count(self) -> int:
        return len(self.clusters)

    def summary_line(self) -> str:
        """Machine-parseable one-line summary, stable key=value format."""
        return (
            f"clusters={self.cluster_count}"
            f" original={self.report.original_count}"
            f" reduced={self.report.reduced_count}"
            f" compression={self.report.compression_pct:.1f}%"
            f" noise={self.noise_count}"
        )


def compress(
    dataset: Dataset,
    params: DbscanParams,
    leaf_capacity: int = DEFAULT_LEAF_CAPACITY,
) -> PipelineResult:
    """Cluster ``dataset`` and reduce each cluster to its centermost row."""
    lat_rad = np.radians(dataset.lats)
    lon_rad = np.radians(dataset.lons)
    index = build_index_arrays(lat_rad, lon_rad, leaf_capacity=leaf_capacity)
    labels = label_arrays(lat_rad, lon_rad, params, index)
    clusters = group_clusters(labels)
    reduced = reduce_dataset(dataset, labels)
    report = compression_report(len(dataset), len(reduced))
    return PipelineResult(
        labels=labels,
        clusters=clusters,
        reduced=reduced,
        report=report,
        noise_count=noise_count(labels),
    )
