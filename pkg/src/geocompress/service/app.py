"""FastAPI service wrapping the compression pipeline for remote callers.

The heavy lifting stays in the core package; endpoints only translate
between wire models and :class:`geocompress.tabular.Dataset`.
"""

from __future__ import annotations

from fastapi import Body, FastAPI, HTTPException, Query, Response

from .. import __version__
from ..dbscan import DbscanParams
from ..pipeline import PipelineResult, compress
from ..reduce import ReducedDataset
from ..svgplot import render_scatter_svg
from ..tabular import Dataset, DatasetError, dataset_from_columns, dumps_csv, loads_csv
from .schemas import (
    CompressRequest,
    CompressResponse,
    CompressSummary,
    HealthResponse,
    PointIn,
    RepresentativePoint,
)


def _dataset_from_points(points: list[PointIn]) -> Dataset:
    attr_names: list[str] = []
    for p in points:
        for name in p.attributes:
            if name not in attr_names:
                attr_names.append(name)
    attr_columns = {
        name: [p.attributes.get(name, "") for p in points] for name in attr_names
    }
    return dataset_from_columns(
        lats=[p.lat for p in points],
        lons=[p.lon for p in points],
        attr_columns=attr_columns,
    )


def _run(dataset: Dataset, eps_km: float, min_samples: int) -> PipelineResult:
    try:
        return compress(dataset, DbscanParams(eps_km=eps_km, min_samples=min_samples))
    except ValueError as err:
        raise HTTPException(status_code=422, detail=str(err)) from err


def _summary(result: PipelineResult) -> CompressSummary:
    return CompressSummary(
        clusters=result.cluster_count,
        original=result.report.original_count,
        reduced=result.report.reduced_count,
        compression_pct=round(result.report.compression_pct, 1),
        noise=result.noise_count,
    )


def _representatives(reduced: ReducedDataset) -> list[RepresentativePoint]:
    return [
        RepresentativePoint(
            lat=rec.point.lat_deg,
            lon=rec.point.lon_deg,
            row_index=rec.row_index,
            cluster_label=rec.cluster_label,
            cluster_size=rec.cluster_size,
            attributes=rec.attributes,
        )
        for rec in reduced
    ]


def create_app() -> FastAPI:
    app = FastAPI(
        title="geocompress",
        version=__version__,
        description="Compress GPS point sets to spatially representative points.",
    )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(version=__version__)

    @app.post("/compress", response_model=CompressResponse)
    def compress_points(request: CompressRequest) -> CompressResponse:
        try:
            dataset = _dataset_from_points(request.points)
        except DatasetError as err:
            raise HTTPException(status_code=422, detail=str(err)) from err
        result = _run(dataset, request.eps_km, request.min_samples)
        return CompressResponse(summary=_summary(result), points=_representatives(result.reduced))

    @app.post("/compress/csv")
    def compress_csv(
        body: bytes = Body(media_type="text/csv"),
        eps_km: float = Query(default=1.5, gt=0),
        min_samples: int = Query(default=1, ge=1),
        lat_col: str = Query(default="lat"),
        lon_col: str = Query(default="lon"),
    ) -> Response:
        try:
            dataset = loads_csv(body.decode("utf-8"), lat_col=lat_col, lon_col=lon_col, source="request body")
        except (DatasetError, UnicodeDecodeError) as err:
            raise HTTPException(status_code=422, detail=str(err)) from err
        result = _run(dataset, eps_km, min_samples)
        csv_text = dumps_csv(result.reduced, dataset.column_names, lat_col=dataset.lat_col, lon_col=dataset.lon_col)
        return Response(
            content=csv_text,
            media_type="text/csv",
            headers={"X-Summary": result.summary_line()},
        )

    @app.post("/compress/svg")
    def compress_svg(request: CompressRequest) -> Response:
        try:
            dataset = _dataset_from_points(request.points)
        except DatasetError as err:
            raise HTTPException(status_code=422, detail=str(err)) from err
        result = _run(dataset, request.eps_km, request.min_samples)
        return Response(content=render_scatter_svg(dataset, result.reduced), media_type="image/svg+xml")

    return app


app = create_app()
