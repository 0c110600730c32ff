# ♥♥─── Report View ──────────────────────────────────────────────────────────────
"""Rich tables for the reports printed by the command line."""

from __future__ import annotations

from typing import TYPE_CHECKING

from rich.panel import Panel
from rich.table import Table

from .console import console, status_style


if TYPE_CHECKING:
    from rich.console import RenderableType

    from bidisc.core.models.reports import CensusReport, SweepReport, EntropyReport, DensityReport, WitnessRecord, VerificationReport


def _status(value: str) -> str:
    return f"[{status_style(value)}]{value.upper()}[/]"


def _grid() -> Table:
    grid = Table.grid(padding=(0, 2))
    grid.add_column(style="muted")
    grid.add_column()
    return grid


def _witness(w: WitnessRecord) -> str:
    parts = [f"stage {w.stage}"]
    if w.triple:
        parts.append(f"triple {w.triple}")
    if w.sides:
        parts.append("sides " + " ".join(str(side) for side in w.sides))
    if w.neighbourhood:
        parts.append(f"{w.disc} disc around {w.neighbourhood} (capped {w.capped})")
    if w.detail:
        parts.append(w.detail)
    return ", ".join(parts)


# ─── Verification ──────────────────────────────────────────────────────────────
def verification_view(report: VerificationReport) -> RenderableType:
    grid = _grid()
    grid.add_row("x", f"[interval]{report.x}[/]")
    grid.add_row("status", _status(report.status.value))
    grid.add_row("stage", f"[stage]{report.stage}[/]")
    grid.add_row("alpha_1", str(report.alpha_1))
    grid.add_row("alpha_r", str(report.alpha_r))
    if report.m and report.z:
        grid.add_row("m", "  ".join(f"{q}: {v.lo}" for q, v in report.m.items()))
        grid.add_row("Z", "  ".join(f"{q}: {v.lo}" for q, v in report.z.items()))
    grid.add_row("boxes", f"[number]{report.boxes_checked}[/] " + " ".join(f"{k}={n}" for k, n in report.boxes_by_triple.items()))
    grid.add_row("max depth", f"[number]{report.max_depth}[/]")
    if report.samples:
        grid.add_row("samples", f"{report.samples} ({report.sample_violations} negative)")
    grid.add_row("eta", f"{report.eta:g}")
    grid.add_row("time", f"{report.wall_time:.2f}s")
    if report.witness:
        grid.add_row("witness", _witness(report.witness))
    return Panel(grid, title="verification", border_style="panel.border")


def sweep_view(report: SweepReport) -> RenderableType:
    table = Table(title=f"sweep of {len(report.intervals)} intervals, eta={report.eta:g}", header_style="table.header", border_style="panel.border")
    for column in ("x", "status", "alpha_1", "alpha_r", "boxes", "depth", "time"):
        table.add_column(column, justify="right" if column in {"boxes", "depth", "time"} else "left")
    for r in report.intervals:
        table.add_row(str(r.x), _status(r.status.value), f"{float(r.alpha_1.lo):+.6f}", f"{float(r.alpha_r.lo):+.6f}", str(r.boxes_checked), str(r.max_depth), f"{r.wall_time:.1f}s")
    table.caption = f"{'all certified' if report.all_certified else f'{len(report.failures)} not certified'}, {report.total_boxes} boxes, {report.wall_time:.1f}s"
    return table


# ─── Packings ──────────────────────────────────────────────────────────────────
def census_view(report: CensusReport, top: int = 12) -> RenderableType:
    table = Table(title=f"neighbourhoods in window {report.window:g} ({report.interior} interior discs)", header_style="table.header", border_style="panel.border")
    table.add_column("disc:word")
    table.add_column("count", justify="right")
    table.add_column("share", justify="right")
    for key, n in sorted(report.counts.items(), key=lambda item: (-item[1], item[0]))[:top]:
        table.add_row(key, str(n), f"{n / report.interior:.4f}")
    caption = [f"bad fraction {regime}: {value:.4f}" for regime, value in report.bad_fraction.items()]
    if report.defect_bound is not None:
        caption.append(f"defect bound {report.defect_bound}")
    table.caption = "; ".join(caption)
    return table


def density_view(report: DensityReport) -> RenderableType:
    grid = _grid()
    grid.add_row("window", f"[-{report.k:g}, {report.k:g}]^2")
    grid.add_row("density", f"[interval]{report.density}[/]")
    grid.add_row("large fraction", f"[number]{report.large_fraction:.6f}[/]")
    grid.add_row("delta_max", f"[interval]{report.delta_max}[/]")
    grid.add_row("relative gap", f"[number]{report.relative_gap:.4%}[/]")
    return Panel(grid, title=f"density of {report.source}", border_style="panel.border")


def entropy_view(report: EntropyReport) -> RenderableType:
    grid = _grid()
    grid.add_row("alpha", report.alpha)
    grid.add_row("n", str(report.n))
    for label, value in (
        ("beta", report.beta),
        ("squares", report.squares),
        ("triangles", report.triangles),
        ("f(beta, n)", report.ratio),
        ("smallest n", report.smallest_n),
        ("dodecagon identity", report.dodecagon_identity),
        ("pattern bound", report.pattern_bound),
    ):
        if value is not None:
            grid.add_row(label, str(value))
    return Panel(grid, title="entropy", border_style="panel.border")


def show(renderable: RenderableType) -> None:
    console.print(renderable)
