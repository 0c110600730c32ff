from __future__ import annotations

import csv

import pytest

from bidisc.utils import emit_plot_data, render_curve_svg, render_tiling_svg
from bidisc.utils.plot_data import plot_rows, density_curve_rows
from bidisc.core.constructions import column_tiling
from bidisc.core.models.reports import SweepReport, VerificationReport
from bidisc.core.models.base_enums import PlotKind, VerificationStatus
from bidisc.core.models.base_model import IntervalRecord


def interval_report(lo: float, hi: float, status: VerificationStatus, boxes: int) -> VerificationReport:
    return VerificationReport(
        x=IntervalRecord(lo=repr(lo), hi=repr(hi)),
        status=status,
        stage="local",
        boxes_checked=boxes,
        max_depth=7,
        alpha_1=IntervalRecord(lo="0.04", hi="0.05"),
        alpha_r=IntervalRecord(lo="-0.05", hi="-0.04"),
        identity=IntervalRecord(lo="-1e-17", hi="1e-17"),
    )


@pytest.fixture
def sweep_report() -> SweepReport:
    return SweepReport(
        subdivisions=2,
        intervals=[interval_report(0.0, 0.5, VerificationStatus.CERTIFIED, 120), interval_report(0.5, 1.0, VerificationStatus.DEPTH_EXCEEDED, 80)],
    )


def test_density_curve_endpoints_and_peak():
    header, rows = density_curve_rows(11)
    assert header == ["x", "delta_lo", "delta_hi"]
    values = [(float(x), float(lo)) for x, lo, _ in rows]
    assert values[0][0] == 0.0
    assert values[-1][0] == 1.0
    assert values[0][1] == pytest.approx(values[-1][1], abs=1e-12)
    assert max(values, key=lambda v: v[1])[0] == 0.5


def test_sweep_series_need_a_report():
    with pytest.raises(ValueError, match="sweep report"):
        plot_rows(PlotKind.ALPHA)


def test_sweep_aggregates(sweep_report):
    assert sweep_report.total_boxes == 200
    assert not sweep_report.all_certified
    assert [r.x.lo for r in sweep_report.failures] == ["0.5"]


def test_boxes_csv(tmp_path, sweep_report):
    path = emit_plot_data(PlotKind.BOXES, tmp_path / "boxes.csv", sweep_report)
    with path.open(encoding="utf-8") as f:
        rows = list(csv.reader(f))
    assert rows == [
        ["x_lo", "x_hi", "boxes", "max_depth", "status"],
        ["0.0", "0.5", "120", "7", "certified"],
        ["0.5", "1.0", "80", "7", "depth_exceeded"],
    ]


def test_alpha_svg(tmp_path, sweep_report):
    path = render_curve_svg(PlotKind.ALPHA, tmp_path / "alpha.svg", sweep_report)
    assert "<svg" in path.read_text(encoding="utf-8")


def test_tiling_svg(tmp_path):
    path = render_tiling_svg(column_tiling(0.75, 2), tmp_path / "tiling.svg")
    assert path.stat().st_size > 0
