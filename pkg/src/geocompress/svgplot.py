"""Before/after scatter plots as self-contained SVG, no plotting library.

Equirectangular mapping: x is longitude, y is negated latitude, each scaled
linearly into a 1200x600 viewport with 5% margins. Original rows draw first
as small dark dots; representative rows draw on top as larger light-green
markers. Output bytes are deterministic for identical inputs.
"""

from __future__ import annotations

from .reduce import ReducedDataset
from .tabular import Dataset, DatasetError

WIDTH = 1200
HEIGHT = 600
MARGIN_FRACTION = 0.05

_ORIGINAL_STYLE = 'r="2" fill="#1f1f1f" fill-opacity="0.6"'
_REDUCED_STYLE = 'r="5" fill="#90ee90" stroke="#1f7a1f" stroke-width="1"'

_HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">\n'
    f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>\n'
)


class _Projection:
    def __init__(self, lons, lats):
        min_lon, max_lon = min(lons), max(lons)
        min_lat, max_lat = min(lats), max(lats)
        self.min_lon = min_lon
        self.max_lat = max_lat
        self.x0 = WIDTH * MARGIN_FRACTION
        self.y0 = HEIGHT * MARGIN_FRACTION
        lon_span = max_lon - min_lon
        lat_span = max_lat - min_lat
        usable_w = WIDTH * (1.0 - 2.0 * MARGIN_FRACTION)
        usable_h = HEIGHT * (1.0 - 2.0 * MARGIN_FRACTION)
        # Degenerate spans (single point, one row) park points mid-axis.
        self.sx = usable_w / lon_span if lon_span > 0.0 else 0.0
        self.sy = usable_h / lat_span if lat_span > 0.0 else 0.0
        self.cx = self.x0 + usable_w / 2.0
        self.cy = self.y0 + usable_h / 2.0

    def __call__(self, lon: float, lat: float) -> tuple[float, float]:
        x = self.x0 + (lon - self.min_lon) * self.sx if self.sx else self.cx
        y = self.y0 + (self.max_lat - lat) * self.sy if self.sy else self.cy
        return x, y


def render_scatter_svg(dataset: Dataset, reduced: ReducedDataset) -> str:
    """Render the original and reduced point sets as one SVG document."""
    lons = list(dataset.lons) + [rec.point.lon_deg for rec in reduced]
    lats = list(dataset.lats) + [rec.point.lat_deg for rec in reduced]
    if not lons:
        raise ValueError("nothing to plot")
    project = _Projection(lons, lats)

    parts = [_HEADER, '<g id="original">\n']
    for i in range(len(dataset)):
        x, y = project(float(dataset.lons[i]), float(dataset.lats[i]))
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" {_ORIGINAL_STYLE}/>\n')
    parts.append('</g>\n<g id="reduced">\n')
    for rec in reduced:
        x, y = project(rec.point.lon_deg, rec.point.lat_deg)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" {_REDUCED_STYLE}/>\n')
    parts.append("</g>\n</svg>\n")
    return "".join(parts)


def emit_scatter_svg(dataset: Dataset, reduced: ReducedDataset, path) -> None:
    """Write the scatter plot to ``path``."""
    text = render_scatter_svg(dataset, reduced)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as err:
        raise DatasetError(f"cannot write {path}: {err}") from err
