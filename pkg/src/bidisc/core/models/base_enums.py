# ♥♥─── Model Enums ────────────────────────────────────────────────────
from __future__ import annotations

from enum import StrEnum

from bidisc.core.interval import ONE, R, Interval, RADIUS_SMALL


class RadiusClass(StrEnum):
    """Disc size: radius 1 (large) or r = sqrt(2) - 1 (small)."""

    LARGE = "L"
    SMALL = "S"

    def radius(self) -> Interval:
        return ONE if self is RadiusClass.LARGE else R

    @property
    def nominal(self) -> float:
        return 1.0 if self is RadiusClass.LARGE else RADIUS_SMALL

    @property
    def letter(self) -> str:
        """Letter used in neighbourhood words."""
        return "1" if self is RadiusClass.LARGE else "r"

    @classmethod
    def from_letter(cls, letter: str) -> RadiusClass:
        return cls.LARGE if letter == "1" else cls.SMALL


class Regime(StrEnum):
    """Stoichiometry side used by the bad-neighbourhood rules and the potential scheme."""

    X_LE_HALF = "x_le_half"
    X_GE_HALF = "x_ge_half"


class TightTriangleKind(StrEnum):
    T111 = "111"
    T11R = "11r"
    T1RR = "1rr"
    TRRR = "rrr"


class PairClass(StrEnum):
    """Radius classes of the two discs joined by an edge."""

    P11 = "11"
    P1R = "1r"
    PRR = "rr"


class VertexLabel(StrEnum):
    """Base vertex potential label; the middle letter is the vertex's own class."""

    V111 = "111"
    V11R = "11r"
    V1R1 = "1r1"
    V1RR = "1rr"
    VR1R = "r1r"
    VRRR = "rrr"


class VerificationStatus(StrEnum):
    CERTIFIED = "certified"
    FAILED = "failed"
    DEPTH_EXCEEDED = "depth_exceeded"


class TileKind(StrEnum):
    SQUARE = "square"
    TRIANGLE = "triangle"


class OutputFormat(StrEnum):
    JSON = "json"
    SVG = "svg"
    CSV = "csv"


class PlotKind(StrEnum):
    ALPHA = "alpha"
    BOXES = "boxes"
    DENSITY_CURVE = "density_curve"


class Command(StrEnum):
    VERIFY = "verify"
    SWEEP = "sweep"
    CONSTRUCT = "construct"
    CENSUS = "census"
    DENSITY = "density"
    TILING = "tiling"
    ENTROPY = "entropy"
    PLOT = "plot"
