"""Command-line front end: one invocation runs the whole compression pipeline.

Exit codes: 0 success, 1 bad flags (usage on stderr), 2 ingestion/validation
or I/O failure (one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import math
import sys

from .dbscan import DbscanParams
from .pipeline import compress
from .svgplot import emit_scatter_svg
from .tabular import DatasetError, read_csv, write_csv


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; flag problems are exit 1 here
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(1)


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(value) and value > 0.0):
        raise argparse.ArgumentTypeError(f"must be finite and > 0, got {text}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="geocompress",
        description=(
            "Compress a CSV of GPS points to one spatially representative "
            "row per cluster (haversine DBSCAN, centermost member kept)."
        ),
    )
    parser.add_argument("--input", required=True, help="input CSV path")
    parser.add_argument("--output", required=True, help="output CSV path")
    parser.add_argument(
        "--eps-km",
        type=_positive_float,
        default=1.5,
        help="cluster radius in kilometres (default: 1.5)",
    )
    parser.add_argument(
        "--min-samples",
        type=_positive_int,
        default=1,
        help="minimum neighbourhood size, self included (default: 1)",
    )
    parser.add_argument("--lat-col", default="lat", help="latitude column name (default: lat)")
    parser.add_argument("--lon-col", default="lon", help="longitude column name (default: lon)")
    parser.add_argument("--plot", default=None, help="also write a before/after scatter SVG here")
    parser.add_argument("--quiet", action="store_true", help="suppress the summary line")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        dataset = read_csv(args.input, lat_col=args.lat_col, lon_col=args.lon_col)
        result = compress(dataset, DbscanParams(eps_km=args.eps_km, min_samples=args.min_samples))
        write_csv(
            result.reduced,
            dataset.column_names,
            args.output,
            lat_col=dataset.lat_col,
            lon_col=dataset.lon_col,
        )
        if args.plot is not None:
            emit_scatter_svg(dataset, result.reduced, args.plot)
    except (DatasetError, ValueError, OSError) as err:
        print(f"geocompress: error: {err}", file=sys.stderr)
        return 2
    if not args.quiet:
        print(result.summary_line())
    return 0


if __name__ == "__main__":
    sys.exit(main())
