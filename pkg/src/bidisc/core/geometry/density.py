# ♥♥─── Density Core ─────────────────────────────────────────────────────────────
"""Maximal density, triangle area, disc coverage and emptiness over intervals.

Triangles are described by side lengths only. Side i is opposite vertex i and
joins the centres of the two other discs.
"""

from __future__ import annotations

from typing import Any, Self
from enum import StrEnum
from functools import lru_cache
from dataclasses import dataclass

import mpmath

from bidisc.core.errors import OutOfRange, DegenerateBox, SectorCrossesOppositeSide
from bidisc.core.interval import ONE, PI, R, SQRT2, SQRT3, HALF_PI, R_SQUARED, Interval, isum, acos_i, sqrt_i
from bidisc.core.models.base_enums import RadiusClass, TightTriangleKind
from bidisc.core.interval.interval import Operand


# ─── Maximal Density ───────────────────────────────────────────────────────────
def _delta_le_half(t: float) -> Interval:
    x = Interval.point(t)
    numerator = PI * (x + (1 - x) * R_SQUARED)
    denominator = 4 * x + 2 * (1 - 2 * x) * R_SQUARED * SQRT3
    return numerator / denominator


def _delta_ge_half(t: float) -> Interval:
    x = Interval.point(t)
    numerator = PI * (x + (1 - x) * R_SQUARED)
    denominator = 4 * (1 - x) + 2 * (2 * x - 1) * SQRT3
    return numerator / denominator


def delta_max(x: Operand) -> Interval:
    """Enclose the maximal density over a stoichiometry interval.

    Each branch is a ratio of affine functions of x, hence monotone, so the
    image of a sub-interval is the hull of its endpoint images.

    :param x: Proportion of large discs, a sub-interval of [0, 1].
    :returns: Enclosure of {delta(t) : t in x}.
    :raises OutOfRange: If x leaves [0, 1].
    """
    xi = Interval.coerce(x)
    if xi.lo < 0 or xi.hi > 1:
        msg = f"stoichiometry {xi!r} is not inside [0, 1]"
        raise OutOfRange(msg)
    pieces: list[Interval] = []
    if xi.lo <= 0.5:
        pieces += [_delta_le_half(xi.lo), _delta_le_half(min(xi.hi, 0.5))]
    if xi.hi >= 0.5:
        pieces += [_delta_ge_half(max(xi.lo, 0.5)), _delta_ge_half(xi.hi)]
    return pieces[0].hull(*pieces[1:])


def delta_branches_at_half() -> tuple[Interval, Interval]:
    """Both closed forms evaluated at x = 1/2; they must overlap."""
    return _delta_le_half(0.5), _delta_ge_half(0.5)


def delta_max_mp(x: Any) -> Any:
    """Point value of the maximal density in the current mpmath precision."""
    x = mpmath.mpf(x)
    r2 = 3 - 2 * mpmath.sqrt(2)
    numerator = mpmath.pi * (x + (1 - x) * r2)
    if x <= mpmath.mpf(1) / 2:
        return numerator / (4 * x + 2 * (1 - 2 * x) * r2 * mpmath.sqrt(3))
    return numerator / (4 * (1 - x) + 2 * (2 * x - 1) * mpmath.sqrt(3))


# ─── Triangles ─────────────────────────────────────────────────────────────────
class CoverageValidity(StrEnum):
    """Whether every vertex disc stays on its side of the opposite edge."""

    VALID = "valid"
    CROSSING = "crossing"
    UNDETERMINED = "undetermined"


def _others(i: int) -> tuple[int, int]:
    return (i + 1) % 3, (i + 2) % 3


@dataclass(frozen=True, slots=True)
class TriangleSpec:
    """Radius classes of the three vertices plus a box of side lengths."""

    radii: tuple[RadiusClass, RadiusClass, RadiusClass]
    sides: tuple[Interval, Interval, Interval]

    def __post_init__(self) -> None:
        if any(side.lo < 0 for side in self.sides):
            msg = f"side lengths must be nonnegative: {self.sides}"
            raise DegenerateBox(msg)

    @classmethod
    def from_lengths(cls, radii: tuple[RadiusClass, RadiusClass, RadiusClass], lengths: tuple[float, float, float]) -> Self:
        a, b, c = (Interval.point(length) for length in lengths)
        return cls(radii, (a, b, c))

    def radius(self, i: int) -> Interval:
        return self.radii[i].radius()

    def radius_squared(self, i: int) -> Interval:
        return ONE if self.radii[i] is RadiusClass.LARGE else R_SQUARED

    def radius_sum(self, i: int) -> Interval:
        """Sum of the radii at the two ends of side i (its tight length)."""
        j, k = _others(i)
        return self.radius(j) + self.radius(k)

    def with_side(self, i: int, side: Interval) -> TriangleSpec:
        sides = list(self.sides)
        sides[i] = side
        return TriangleSpec(self.radii, (sides[0], sides[1], sides[2]))

    def widest_side(self) -> int:
        widths = [side.width for side in self.sides]
        return widths.index(max(widths))


# ─── Area ──────────────────────────────────────────────────────────────────────
def heron_factors(t: TriangleSpec) -> tuple[Interval, Interval, Interval, Interval]:
    a, b, c = t.sides
    return a + b + c, -a + b + c, a - b + c, a + b - c


def triangle_inequality_fails(t: TriangleSpec) -> bool:
    """True when no side combination in the box forms a proper triangle."""
    return any(factor.hi <= 0 for factor in heron_factors(t))


def triangle_area(t: TriangleSpec) -> Interval:
    """Heron's formula in the factored form 16·A**2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c).

    :raises DegenerateBox: If the triangle inequality fails on the whole box.
    """
    product = ONE
    for factor in heron_factors(t):
        if factor.hi <= 0:
            msg = f"triangle inequality fails throughout the box {t.sides}"
            raise DegenerateBox(msg)
        product *= Interval(max(factor.lo, 0.0), factor.hi)
    return sqrt_i(product) / 4


# ─── Angles ────────────────────────────────────────────────────────────────────
def _cosine_at(opposite: float, b: Interval, c: Interval) -> Interval:
    return (b.sqr() + c.sqr() - Interval.point(opposite).sqr()) / (2 * b * c)


def angle_cosine(t: TriangleSpec, i: int) -> Interval:
    """Enclosure of cos of the angle at vertex i, intersected with [-1, 1].

    The cosine decreases in the opposite side, so its extremes come from the
    endpoints of that side.

    :raises DegenerateBox: If the enclosure misses [-1, 1].
    """
    j, k = _others(i)
    a, b, c = t.sides[i], t.sides[j], t.sides[k]
    raw = Interval(_cosine_at(a.hi, b, c).lo, _cosine_at(a.lo, b, c).hi)
    if raw.lo > 1 or raw.hi < -1:
        msg = f"angle {i} is not realisable on the box {t.sides}"
        raise DegenerateBox(msg)
    return Interval(max(raw.lo, -1.0), min(raw.hi, 1.0))


def triangle_angle(t: TriangleSpec, i: int) -> Interval:
    return acos_i(angle_cosine(t, i))


def triangle_angles(t: TriangleSpec) -> tuple[Interval, Interval, Interval]:
    return triangle_angle(t, 0), triangle_angle(t, 1), triangle_angle(t, 2)


# ─── Coverage ──────────────────────────────────────────────────────────────────
def coverage_validity(t: TriangleSpec, area: Interval | None = None) -> CoverageValidity:
    """Compare each vertex's distance to the opposite side line (2A/s_i) with its radius."""
    area = triangle_area(t) if area is None else area
    undetermined = False
    for i in range(3):
        height = 2 * area / t.sides[i]
        radius = t.radius(i)
        if height.hi < radius.lo:
            return CoverageValidity.CROSSING
        if height.lo < radius.hi:
            undetermined = True
    return CoverageValidity.UNDETERMINED if undetermined else CoverageValidity.VALID


def sector_sum(t: TriangleSpec, angles: tuple[Interval, Interval, Interval] | None = None) -> Interval:
    """Sum of the vertex sectors, angle_i / 2 · radius_i**2.

    This always bounds the covered area from above and equals it when the
    coverage is VALID.
    """
    angles = triangle_angles(t) if angles is None else angles
    return isum([angles[i] * t.radius_squared(i) / 2 for i in range(3)])


def triangle_coverage(t: TriangleSpec) -> Interval:
    """Area of the triangle inside the three vertex discs.

    :raises SectorCrossesOppositeSide: Unless every vertex disc provably stays clear of the opposite side.
    """
    validity = coverage_validity(t)
    if validity is not CoverageValidity.VALID:
        msg = f"a vertex disc may reach the opposite side on {t.sides} ({validity})"
        raise SectorCrossesOppositeSide(msg)
    return sector_sum(t)


def emptiness(t: TriangleSpec, x: Operand, delta: Interval | None = None) -> Interval:
    """E(T) = delta(x)·area(T) - cov(T) over the whole box."""
    density = delta_max(x) if delta is None else delta
    return density * triangle_area(t) - triangle_coverage(t)


# ─── Tight Triangles ───────────────────────────────────────────────────────────
L, S = RadiusClass.LARGE, RadiusClass.SMALL
TWO = Interval(2.0, 2.0)
TWO_R = 2 * R

TIGHT_RADII: dict[TightTriangleKind, tuple[RadiusClass, RadiusClass, RadiusClass]] = {
    TightTriangleKind.T111: (L, L, L),
    TightTriangleKind.T11R: (L, L, S),
    TightTriangleKind.T1RR: (L, S, S),
    TightTriangleKind.TRRR: (S, S, S),
}


def tight_spec(kind: TightTriangleKind) -> TriangleSpec:
    """Three mutually tangent discs; every side equals its radius sum."""
    radii = TIGHT_RADII[kind]

    def length(j: int, k: int) -> Interval:
        pair = {radii[j], radii[k]}
        if pair == {L}:
            return TWO
        if pair == {S}:
            return TWO_R
        return SQRT2

    return TriangleSpec(radii, (length(1, 2), length(2, 0), length(0, 1)))


@lru_cache(maxsize=1)
def large_angle_in_1rr() -> Interval:
    """Angle at the large disc of the tight (1, r, r) triangle: arccos(1 - r**2)."""
    return acos_i(1 - R_SQUARED)


@lru_cache(maxsize=4)
def tight_area(kind: TightTriangleKind) -> Interval:
    match kind:
        case TightTriangleKind.T111:
            return SQRT3
        case TightTriangleKind.T11R:
            return ONE
        case TightTriangleKind.T1RR:
            return R * sqrt_i(2 - R_SQUARED)
        case TightTriangleKind.TRRR:
            return R_SQUARED * SQRT3


@lru_cache(maxsize=4)
def tight_coverage(kind: TightTriangleKind) -> Interval:
    match kind:
        case TightTriangleKind.T111:
            return HALF_PI
        case TightTriangleKind.T11R:
            return PI * (1 + R_SQUARED) / 4
        case TightTriangleKind.T1RR:
            theta = large_angle_in_1rr()
            return theta / 2 + (PI - theta) * R_SQUARED / 2
        case TightTriangleKind.TRRR:
            return HALF_PI * R_SQUARED


def tight_emptiness(kind: TightTriangleKind, x: Operand, delta: Interval | None = None) -> Interval:
    """Emptiness of the tight triangle of ``kind`` at stoichiometry x."""
    density = delta_max(x) if delta is None else delta
    return density * tight_area(kind) - tight_coverage(kind)
