# ♥♥─── Geometry Init ────────────────────────────────────────────────────────────
from __future__ import annotations

from .density import (
    TriangleSpec,
    CoverageValidity,
    delta_max,
    emptiness,
    sector_sum,
    tight_area,
    tight_spec,
    delta_max_mp,
    angle_cosine,
    heron_factors,
    triangle_area,
    triangle_angle,
    tight_coverage,
    triangle_angles,
    tight_emptiness,
    coverage_validity,
    triangle_coverage,
    large_angle_in_1rr,
    delta_branches_at_half,
    triangle_inequality_fails,
)


__all__ = [
    "CoverageValidity",
    "TriangleSpec",
    "angle_cosine",
    "coverage_validity",
    "delta_branches_at_half",
    "delta_max",
    "delta_max_mp",
    "emptiness",
    "heron_factors",
    "large_angle_in_1rr",
    "sector_sum",
    "tight_area",
    "tight_coverage",
    "tight_emptiness",
    "tight_spec",
    "triangle_angle",
    "triangle_angles",
    "triangle_area",
    "triangle_coverage",
    "triangle_inequality_fails",
]
