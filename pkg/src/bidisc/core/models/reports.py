# ♥♥─── Run Reports ──────────────────────────────────────────────────────────────
"""Serialisable results of every command, each embedding the run configuration."""

from __future__ import annotations

from typing import Any

from pydantic import Field, computed_field

from .base_enums import Command, VerificationStatus
from .base_model import IntervalRecord, BidiscBaseModel, artifact_version


SATURATION_NOTE = (
    "triangle sides bounded by the sum of radii plus 2r: assumes a saturated packing, where no small disc can be inserted; inserting discs never lowers density"
)


# ─── Configuration ─────────────────────────────────────────────────────────────
class RunConfig(BidiscBaseModel):
    """The command and its effective options, after settings and flags were merged."""

    command: Command
    options: dict[str, Any] = Field(default_factory=dict)


class ReportBase(BidiscBaseModel):
    version: str = Field(default_factory=artifact_version)
    config: RunConfig | None = None


# ─── Verification ──────────────────────────────────────────────────────────────
class WitnessRecord(BidiscBaseModel):
    """Where a verification stopped: a triangle box, a neighbourhood, or a residual."""

    stage: str
    triple: str | None = None
    sides: list[IntervalRecord] | None = None
    disc: str | None = None
    neighbourhood: str | None = None
    capped: list[int] | None = None
    detail: str = ""


class VerificationReport(ReportBase):
    x: IntervalRecord
    eta: float = 0.0
    delta_offset: float = 0.0
    status: VerificationStatus
    stage: str = Field(description="Last pipeline stage reached: identity, calibration, vertex or local")
    boxes_checked: int = 0
    boxes_by_triple: dict[str, int] = Field(default_factory=dict)
    outcomes: dict[str, int] = Field(default_factory=dict)
    max_depth: int = 0
    alpha_1: IntervalRecord
    alpha_r: IntervalRecord
    identity: IntervalRecord
    m: dict[str, IntervalRecord] | None = None
    z: dict[str, IntervalRecord] | None = None
    samples: int = 0
    sample_violations: int = 0
    wall_time: float = 0.0
    witness: WitnessRecord | None = None
    assumptions: list[str] = Field(default_factory=lambda: [SATURATION_NOTE])

    @property
    def certified(self) -> bool:
        return self.status is VerificationStatus.CERTIFIED


class SweepReport(ReportBase):
    subdivisions: int
    eta: float = 0.0
    intervals: list[VerificationReport] = Field(default_factory=list)
    wall_time: float = 0.0

    @computed_field
    @property
    def all_certified(self) -> bool:
        return all(report.certified for report in self.intervals)

    @computed_field
    @property
    def total_boxes(self) -> int:
        return sum(report.boxes_checked for report in self.intervals)

    @property
    def failures(self) -> list[VerificationReport]:
        return [report for report in self.intervals if not report.certified]


# ─── Packings ──────────────────────────────────────────────────────────────────
class CensusReport(ReportBase):
    source: str
    window: float
    interior: int
    counts: dict[str, int] = Field(default_factory=dict)
    bad_fraction: dict[str, float] = Field(default_factory=dict)
    large_fraction: float | None = None
    defect_bound: IntervalRecord | None = None


class DensityReport(ReportBase):
    source: str
    k: float
    density: IntervalRecord
    large_fraction: float
    delta_max: IntervalRecord
    relative_gap: float = Field(description="(delta_max(x) - density) / delta_max(x) at the measured large-disc fraction")


class EntropyReport(ReportBase):
    alpha: str
    n: int
    beta: str | None = None
    squares: int | None = None
    triangles: int | None = None
    ratio: str | None = None
    smallest_n: int | None = None
    dodecagon_identity: bool | None = None
    pattern_bound: int | None = None
