# ♥♥─── Plot Data ────────────────────────────────────────────────────────────────
"""CSV series of sweeps and the density curve, and SVG drawings of packings and tilings."""

from __future__ import annotations

import io
import csv
from typing import TYPE_CHECKING
from pathlib import Path

import numpy as np
from matplotlib.figure import Figure
from matplotlib.patches import Circle, Polygon
from matplotlib.collections import PatchCollection

from bidisc.custom_logger import log
from bidisc.core.geometry import delta_max
from bidisc.core.models.base_enums import PlotKind, TileKind, RadiusClass

from .json_handler import write_text_atomic


if TYPE_CHECKING:
    from bidisc.core.packing import Packing
    from bidisc.core.constructions import SquareTriangleTiling
    from bidisc.core.models.reports import SweepReport


DENSITY_CURVE_POINTS = 1001
COLOURS = {"large": "#31748f", "small": "#eb6f92", TileKind.SQUARE: "#f6c177", TileKind.TRIANGLE: "#9ccfd8"}

type Row = list[str | int | float]


# ─── Rows ──────────────────────────────────────────────────────────────────────
def alpha_rows(report: SweepReport) -> tuple[list[str], list[Row]]:
    header = ["x_lo", "x_hi", "alpha_1_lo", "alpha_1_hi", "alpha_r_lo", "alpha_r_hi", "status"]
    rows: list[Row] = [[r.x.lo, r.x.hi, r.alpha_1.lo, r.alpha_1.hi, r.alpha_r.lo, r.alpha_r.hi, r.status.value] for r in report.intervals]
    return header, rows


def boxes_rows(report: SweepReport) -> tuple[list[str], list[Row]]:
    header = ["x_lo", "x_hi", "boxes", "max_depth", "status"]
    rows: list[Row] = [[r.x.lo, r.x.hi, r.boxes_checked, r.max_depth, r.status.value] for r in report.intervals]
    return header, rows


def density_curve_rows(points: int = DENSITY_CURVE_POINTS) -> tuple[list[str], list[Row]]:
    """delta_max sampled on an even grid of [0, 1], endpoints included."""
    rows: list[Row] = []
    for k in range(points):
        x = k / (points - 1)
        value = delta_max(x)
        rows.append([repr(x), repr(value.lo), repr(value.hi)])
    return ["x", "delta_lo", "delta_hi"], rows


def plot_rows(kind: PlotKind, report: SweepReport | None = None) -> tuple[list[str], list[Row]]:
    """Header and rows of one plot kind; alpha and boxes need a sweep report.

    :raises ValueError: If ``kind`` needs a sweep and none is given.
    """
    if kind is PlotKind.DENSITY_CURVE:
        return density_curve_rows()
    if report is None:
        msg = f"plot kind {kind} needs a sweep report"
        raise ValueError(msg)
    return alpha_rows(report) if kind is PlotKind.ALPHA else boxes_rows(report)


# ─── CSV ───────────────────────────────────────────────────────────────────────
def emit_plot_data(kind: PlotKind, path: str | Path, report: SweepReport | None = None) -> Path:
    """Write the CSV of ``kind`` with a header row.

    :param kind: alpha, boxes or density_curve.
    :param path: Output file.
    :param report: The sweep the alpha and boxes series come from.
    :returns: The written path.
    """
    header, rows = plot_rows(kind, report)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    target = write_text_atomic(Path(path), buffer.getvalue())
    log.info("wrote {} rows of {} to '{}'", len(rows), kind, target)
    return target


# ─── SVG ───────────────────────────────────────────────────────────────────────
def _save_svg(fig: Figure, path: str | Path) -> Path:
    buffer = io.StringIO()
    fig.savefig(buffer, format="svg", bbox_inches="tight")
    return write_text_atomic(Path(path), buffer.getvalue())


def render_curve_svg(kind: PlotKind, path: str | Path, report: SweepReport | None = None) -> Path:
    """Line plot of a plot kind; interval series are drawn at their midpoints."""
    header, rows = plot_rows(kind, report)
    data = np.array([[float(v) for v in row[:-1]] for row in rows]) if kind is not PlotKind.DENSITY_CURVE else np.array(rows, dtype=float)
    fig = Figure(figsize=(7, 4))
    ax = fig.add_subplot()
    match kind:
        case PlotKind.DENSITY_CURVE:
            ax.plot(data[:, 0], data[:, 1], color=COLOURS["large"])
            ax.set_ylabel("maximal density")
        case PlotKind.ALPHA:
            mid = data[:, :2].mean(axis=1)
            ax.plot(mid, data[:, 2:4].mean(axis=1), label="alpha_1", color=COLOURS["large"])
            ax.plot(mid, data[:, 4:6].mean(axis=1), label="alpha_r", color=COLOURS["small"])
            ax.axhline(0, color="grey", linewidth=0.5)
            ax.legend()
        case PlotKind.BOXES:
            ax.bar(data[:, :2].mean(axis=1), data[:, 2] / 1000, width=data[:, 1] - data[:, 0], color=COLOURS["large"])
            ax.set_ylabel("thousands of boxes")
    ax.set_xlabel(header[0].split("_")[0])
    return _save_svg(fig, path)


def render_packing_svg(p: Packing, path: str | Path) -> Path:
    fig = Figure(figsize=(8, 8))
    ax = fig.add_subplot()
    discs = [Circle(d.center, d.radius) for d in p.discs]
    colours = [COLOURS["large"] if d.size is RadiusClass.LARGE else COLOURS["small"] for d in p.discs]
    ax.add_collection(PatchCollection(discs, facecolors=colours, edgecolors="black", linewidths=0.2))
    if len(p):
        lo, hi = p.centers.min(axis=0) - 1, p.centers.max(axis=0) + 1
        ax.set_xlim(lo[0], hi[0])
        ax.set_ylim(lo[1], hi[1])
    ax.set_aspect("equal")
    ax.axis("off")
    return _save_svg(fig, path)


def render_tiling_svg(t: SquareTriangleTiling, path: str | Path) -> Path:
    fig = Figure(figsize=(8, 8))
    ax = fig.add_subplot()
    tiles = [Polygon(t.points[list(tile.vertices)], closed=True) for tile in t.tiles]
    ax.add_collection(PatchCollection(tiles, facecolors=[COLOURS[tile.kind] for tile in t.tiles], edgecolors="black", linewidths=0.3))
    if len(t.vertices):
        lo, hi = t.points.min(axis=0) - 1, t.points.max(axis=0) + 1
        ax.set_xlim(lo[0], hi[0])
        ax.set_ylim(lo[1], hi[1])
    ax.set_aspect("equal")
    ax.axis("off")
    return _save_svg(fig, path)
