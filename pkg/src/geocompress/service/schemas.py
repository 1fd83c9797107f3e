"""Pydantic request/response models for the compression service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class PointIn(BaseModel):
    lat: float = Field(ge=-90, le=90, description="latitude, decimal degrees")
    lon: float = Field(ge=-180, le=180, description="longitude, decimal degrees")
    attributes: dict[str, str] = Field(default_factory=dict)


class CompressRequest(BaseModel):
    points: list[PointIn] = Field(min_length=1)
    eps_km: float = Field(default=1.5, gt=0, description="cluster radius in kilometres")
    min_samples: int = Field(default=1, ge=1)


class RepresentativePoint(BaseModel):
    lat: float
    lon: float
    row_index: int = Field(description="0-based row in the submitted order")
    cluster_label: int
    cluster_size: int
    attributes: dict[str, str] = Field(default_factory=dict)


class CompressSummary(BaseModel):
    clusters: int
    original: int
    reduced: int
    compression_pct: float
    noise: int


class CompressResponse(BaseModel):
    summary: CompressSummary
    points: list[RepresentativePoint]


class HealthResponse(BaseModel):
    status: str = "ok"
    version: str
