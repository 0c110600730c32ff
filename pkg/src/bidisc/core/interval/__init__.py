# ♥♥─── Interval Core ────────────────────────────────────────────────────────────
"""Outward-rounded interval arithmetic and verified constants."""

from __future__ import annotations

from .interval import ONE, HALF, ZERO, Interval, imax, imin, isum, sqrt_i
from .constants import PI, R, SQRT2, SQRT3, TWO_PI, HALF_PI, R_SQUARED, RADIUS_SMALL, ConstantName, const_enclosure
from .elementary import acos_i


__all__ = [
    "HALF",
    "HALF_PI",
    "ONE",
    "PI",
    "R",
    "RADIUS_SMALL",
    "R_SQUARED",
    "SQRT2",
    "SQRT3",
    "TWO_PI",
    "ZERO",
    "ConstantName",
    "Interval",
    "acos_i",
    "const_enclosure",
    "imax",
    "imin",
    "isum",
    "sqrt_i",
]
