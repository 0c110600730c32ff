# ♥♥─── Window Measurements ─────────────────────────────────────────────────────
"""Covered area and disc proportions inside square windows [-k, k]**2."""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from bidisc.core.errors import OutOfRange, EmptyWindow
from bidisc.core.packing import Packing
from bidisc.core.interval import ZERO, Interval
from bidisc.core.packing.packing import MAX_RADIUS


type FloatArray = NDArray[np.float64]

# Absolute error allowance per clipped disc.
PER_DISC_SLACK = 1e-12


def _primitive(t: FloatArray, radius: FloatArray) -> FloatArray:
    """Integral of sqrt(R**2 - s**2) from 0 to t, with t clipped to [-R, R]."""
    t = np.clip(t, -radius, radius)
    return (t * np.sqrt(np.maximum(radius**2 - t**2, 0.0)) + radius**2 * np.arcsin(t / radius)) / 2


def _quadrant_upper(a: FloatArray, b: FloatArray, radius: FloatArray) -> FloatArray:
    """Area of the centred disc inside {X <= a, Y <= b} for b >= 0."""
    a = np.clip(a, -radius, radius)
    t = np.sqrt(np.maximum(radius**2 - b**2, 0.0))
    floor = _primitive(-radius, radius)
    under_arc = _primitive(a, radius) - floor
    outer_left = _primitive(np.minimum(a, -t), radius) - floor
    band = b * np.maximum(0.0, np.minimum(a, t) + t)
    outer_right = np.where(a > t, _primitive(a, radius) - _primitive(t, radius), 0.0)
    return under_arc + outer_left + band + outer_right


def quadrant_area(a: FloatArray, b: FloatArray, radius: FloatArray) -> FloatArray:
    """Area of the centred disc of the given radius inside {X <= a, Y <= b}."""
    upper = _quadrant_upper(a, np.abs(b), radius)
    left_of_a = 2 * (_primitive(np.clip(a, -radius, radius), radius) - _primitive(-radius, radius))
    return np.where(b >= 0, upper, left_of_a - upper)


def clipped_area(p: Packing, k: float) -> Interval:
    """Enclosure of the area of the union of discs inside [-k, k]**2."""
    near = p.indices_in_square(k + MAX_RADIUS)
    if near.size == 0:
        return ZERO
    centers = p.centers[near]
    radius = p.radii[near]
    x0, x1 = -k - centers[:, 0], k - centers[:, 0]
    y0, y1 = -k - centers[:, 1], k - centers[:, 1]
    area = quadrant_area(x1, y1, radius) - quadrant_area(x0, y1, radius) - quadrant_area(x1, y0, radius) + quadrant_area(x0, y0, radius)
    total = float(np.sum(np.maximum(area, 0.0)))
    slack = PER_DISC_SLACK * (near.size + 1) * max(1.0, k)
    return Interval(max(0.0, total - slack), total + slack)


def measured_density(p: Packing, k: float) -> Interval:
    """Enclosure of covered-area([-k, k]**2) / (2k)**2 with exact circle clipping.

    :raises OutOfRange: If k <= 0.
    """
    if k <= 0:
        msg = f"window half-width must be positive, got {k}"
        raise OutOfRange(msg)
    area = clipped_area(p, k)
    if area == ZERO:
        return ZERO
    return area / Interval.point(4 * k * k)


def large_fraction(p: Packing, k: float) -> float:
    """Proportion of large discs among the discs centred in [-k, k]**2.

    :raises EmptyWindow: If no disc centre lies in the window.
    """
    inside = p.indices_in_square(k)
    if inside.size == 0:
        msg = f"no disc centre in the window of half-width {k}"
        raise EmptyWindow(msg)
    return float(p.is_large[inside].mean())
