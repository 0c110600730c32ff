# ♥♥─── Local Inequality ─────────────────────────────────────────────────────────
"""Dichotomy proving E(T) >= U(T) for every triangle a saturated packing can produce.

Each radius triple starts from its root box. A box is discarded when it holds
no triangle or no support circle of radius at most r, certified when the
interval margin is nonnegative, and otherwise halved along its widest side.
Boxes hugging a tight triangle are settled by a first-order expansion from
the tight point, where the margin vanishes exactly.
"""

from __future__ import annotations

from enum import StrEnum
from typing import Any
from functools import lru_cache
from collections import Counter
from dataclasses import field, dataclass

import mpmath
import numpy as np

from bidisc.custom_logger import log
from bidisc.core.errors import DegenerateBox, UncalibratedScheme
from bidisc.core.geometry import (
    TriangleSpec,
    sector_sum,
    tight_spec,
    delta_max_mp,
    angle_cosine,
    triangle_area,
    triangle_angles,
    triangle_inequality_fails,
)
from bidisc.core.interval import ZERO, Interval, imin, isum
from bidisc.core.models.base_enums import Regime, PairClass, RadiusClass, VertexLabel, TightTriangleKind, VerificationStatus
from bidisc.core.certifier.boxes import TriangleBox, root_boxes, support_radius_excluded
from bidisc.core.certifier.scheme import KINDS, AffineForm, PotentialScheme
from bidisc.core.certifier.potentials import edge_pair, label_at, pair_of, vertex_label, vertex_potential, worst_edge_charge


DEPTH_LIMIT = 40
EPSILON_TIGHT = 1e-3
ROUND_OFF = 1e-9


class BoxOutcome(StrEnum):
    CERTIFIED = "certified"
    NOT_A_TRIANGLE = "not_a_triangle"
    NO_SUPPORT = "no_support"
    TIGHT = "tight"
    FAILED = "failed"
    SPLIT = "split"


@dataclass
class LocalCheck:
    """Aggregated outcome of the dichotomy over the four radius triples."""

    status: VerificationStatus = VerificationStatus.CERTIFIED
    witness_kind: TightTriangleKind | None = None
    witness: TriangleSpec | None = None
    boxes: Counter[TightTriangleKind] = field(default_factory=Counter)
    outcomes: Counter[BoxOutcome] = field(default_factory=Counter)
    max_depth: int = 0
    samples: int = 0
    sample_violations: int = 0

    @property
    def boxes_checked(self) -> int:
        return sum(self.boxes.values())


# ─── Margin ────────────────────────────────────────────────────────────────────
def margin(s: PotentialScheme, t: TriangleSpec) -> Interval:
    """Lower enclosure of E(T) - U(T) over the box.

    Coverage is bounded by the vertex sectors and by the area itself, and
    every edge is charged as if the triangle were the donor.

    :raises DegenerateBox: If the box holds no proper triangle.
    """
    area = triangle_area(t)
    angles = triangle_angles(t)
    cover = imin(sector_sum(t, angles), area)
    potential = isum([vertex_potential(s, t, v, angles[v]) for v in range(3)])
    return s.delta * area - cover - potential - worst_edge_charge(s, t)


def tight_defect(s: PotentialScheme, kind: TightTriangleKind) -> Interval:
    """E - U at the tight triangle: E_kind minus its three base potentials, exact when it cancels."""
    t = tight_spec(kind)
    form = AffineForm.of(kind)
    for v in range(3):
        form = form - s.forms[label_at(t, v)]
    return ZERO if form.is_zero else s.evaluate(form)


def _slopes(s: PotentialScheme, hull: TriangleSpec) -> list[Interval]:
    """Lower-bound slopes of the uncapped margin along each side on ``hull``."""
    if s.m is None:
        msg = "tight-margin slopes need calibrated angle coefficients"
        raise UncalibratedScheme(msg)
    area = triangle_area(hull)
    sides = hull.sides
    cosines = [angle_cosine(hull, k) for k in range(3)]
    slopes = []
    for j in range(3):
        k, n = (j + 1) % 3, (j + 2) % 3
        d_area = sides[j] * (sides[k].sqr() + sides[n].sqr() - sides[j].sqr()) / (8 * area)
        slope = s.delta * d_area
        for i in range(3):
            d_angle = sides[i] / (2 * area) if i == j else -sides[i] * cosines[3 - i - j] / (2 * area)
            slope = slope - d_angle * hull.radius_squared(i) / 2 - s.m[hull.radii[i]] * abs(d_angle)
        slopes.append(slope)
    return slopes


def tight_margin_rule(s: PotentialScheme, box: TriangleBox, kind: TightTriangleKind, epsilon: float) -> bool:
    """Mean-value bound from the tight triangle for boxes within ``epsilon`` of it.

    Sides of real triangles never undercut the tight lengths, so every point
    of the box is reached from the tight point by moving the sides up by
    Delta_j in [0, hi_j - tight_j].
    """
    tight = tight_spec(kind)
    reach = [(Interval.point(side.hi) - star).hi for side, star in zip(box.spec.sides, tight.sides, strict=True)]
    if max(reach) > epsilon:
        return False
    h = [side.hull(star) for side, star in zip(box.spec.sides, tight.sides, strict=True)]
    hull = TriangleSpec(tight.radii, (h[0], h[1], h[2]))
    if any(hull.sides[i].hi >= s.edge(edge_pair(hull, i)).l.lo for i in range(3)):
        return False
    try:
        slopes = _slopes(s, hull)
    except DegenerateBox:
        return False
    drop = isum([imin(ZERO, slope) * Interval(0.0, max(dj, 0.0)) for slope, dj in zip(slopes, reach, strict=True)])
    return (tight_defect(s, kind) + drop).lo >= 0


# ─── Dichotomy ─────────────────────────────────────────────────────────────────
def check_box(s: PotentialScheme, box: TriangleBox, kind: TightTriangleKind, epsilon: float = EPSILON_TIGHT) -> tuple[BoxOutcome, Interval | None]:
    """Classify one box; SPLIT asks for bisection."""
    spec = box.spec
    if triangle_inequality_fails(spec):
        return BoxOutcome.NOT_A_TRIANGLE, None
    if support_radius_excluded(spec):
        return BoxOutcome.NO_SUPPORT, None
    if tight_margin_rule(s, box, kind, epsilon):
        return BoxOutcome.TIGHT, None
    try:
        value = margin(s, spec)
    except DegenerateBox:
        return BoxOutcome.SPLIT, None
    if value.lo >= 0:
        return BoxOutcome.CERTIFIED, value
    if value.hi < 0:
        return BoxOutcome.FAILED, value
    return BoxOutcome.SPLIT, value


def verify_local_inequality(
    s: PotentialScheme,
    *,
    depth_limit: int = DEPTH_LIMIT,
    epsilon: float = EPSILON_TIGHT,
    sample_points: int = 0,
    seed: int = 0,
    dps: int = 40,
) -> LocalCheck:
    """Run the dichotomy on the four radius triples.

    :param s: A calibrated scheme.
    :param depth_limit: Deepest bisection level before giving up on a box.
    :param epsilon: Reach of the tight-margin rule.
    :param sample_points: High-precision point evaluations per certified box.
    :param seed: Seed of the sampling generator.
    :param dps: Decimal digits of the point evaluations.
    :returns: CERTIFIED, or the first FAILED / DEPTH_EXCEEDED box as witness.
    """
    result = LocalCheck()
    rng = np.random.default_rng(seed)
    for kind, root in root_boxes().items():
        stack = [root]
        while stack:
            box = stack.pop()
            result.boxes[kind] += 1
            result.max_depth = max(result.max_depth, box.depth)
            outcome, _ = check_box(s, box, kind, epsilon)
            result.outcomes[outcome] += 1
            if outcome is BoxOutcome.CERTIFIED and sample_points:
                _sample(s, box.spec, sample_points, rng, result, dps)
            if outcome is BoxOutcome.FAILED:
                return _stop(result, VerificationStatus.FAILED, kind, box)
            if outcome is BoxOutcome.SPLIT:
                if box.depth >= depth_limit:
                    return _stop(result, VerificationStatus.DEPTH_EXCEEDED, kind, box)
                low, high = box.split()
                stack += [high, low]
        log.debug("local inequality for {} on {}: {} boxes", kind, s.x, result.boxes[kind])
    return result


def _stop(result: LocalCheck, status: VerificationStatus, kind: TightTriangleKind, box: TriangleBox) -> LocalCheck:
    result.status, result.witness_kind, result.witness = status, kind, box.spec
    log.warning("local inequality {} for {} at depth {}: sides {}", status, kind, box.depth, box.spec.sides)
    return result


def _sample(s: PotentialScheme, spec: TriangleSpec, count: int, rng: np.random.Generator, result: LocalCheck, dps: int) -> None:
    low = np.array([side.lo for side in spec.sides])
    high = np.array([side.hi for side in spec.sides])
    for point in rng.uniform(low, high, size=(count, 3)):
        a, b, c = sorted(point)
        if a + b <= c:
            continue
        result.samples += 1
        if evaluate_margin_at(s, spec.radii, (point[0], point[1], point[2]), dps=dps) < -ROUND_OFF:
            result.sample_violations += 1


# ─── Point Evaluation ──────────────────────────────────────────────────────────
@lru_cache(maxsize=4)
def _tight_values_mp(kind: TightTriangleKind, dps: int) -> tuple[Any, Any]:
    with mpmath.workdps(dps):
        r = mpmath.sqrt(2) - 1
        theta = mpmath.acos(1 - r**2)
        match kind:
            case TightTriangleKind.T111:
                return mpmath.sqrt(3), mpmath.pi / 2
            case TightTriangleKind.T11R:
                return mpmath.mpf(1), mpmath.pi * (1 + r**2) / 4
            case TightTriangleKind.T1RR:
                return r * mpmath.sqrt(2 - r**2), theta / 2 + (mpmath.pi - theta) * r**2 / 2
            case _:
                return r**2 * mpmath.sqrt(3), mpmath.pi * r**2 / 2


def _tight_angle_mp(own: RadiusClass, pair: PairClass) -> Any:
    theta = mpmath.acos(1 - (mpmath.sqrt(2) - 1) ** 2)
    match own, pair:
        case RadiusClass.LARGE, PairClass.P11:
            return mpmath.pi / 3
        case RadiusClass.LARGE, PairClass.P1R:
            return mpmath.pi / 4
        case RadiusClass.LARGE, PairClass.PRR:
            return theta
        case RadiusClass.SMALL, PairClass.P11:
            return mpmath.pi / 2
        case RadiusClass.SMALL, PairClass.P1R:
            return (mpmath.pi - theta) / 2
        case _:
            return mpmath.pi / 3


def evaluate_margin_at(
    s: PotentialScheme,
    radii: tuple[RadiusClass, RadiusClass, RadiusClass],
    sides: tuple[float, float, float],
    x: float | None = None,
    dps: int = 40,
) -> Any:
    """E(T) - U(T) at one concrete triangle, recomputed from scratch in mpmath.

    Uses the same coverage bound and edge charging as :func:`margin`, so it is
    an independent witness of what the dichotomy claims.

    :raises DegenerateBox: If the sides do not form a triangle.
    """
    if s.m is None or s.z is None:
        msg = "point evaluation needs calibrated m and Z"
        raise UncalibratedScheme(msg)
    with mpmath.workdps(dps):
        xp = mpmath.mpf(s.x.mid if x is None else x)
        delta = delta_max_mp(xp) + s.delta_offset
        r = mpmath.sqrt(2) - 1
        radius = [mpmath.mpf(1) if q is RadiusClass.LARGE else r for q in radii]
        a, b, c = (mpmath.mpf(side) for side in sides)
        heron = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
        if heron <= 0:
            msg = f"sides {sides} do not form a triangle"
            raise DegenerateBox(msg)
        area = mpmath.sqrt(heron) / 4
        lengths = (a, b, c)
        angles = []
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            cosine = (lengths[j] ** 2 + lengths[k] ** 2 - lengths[i] ** 2) / (2 * lengths[j] * lengths[k])
            angles.append(mpmath.acos(max(-1, min(1, cosine))))
        cover = min(sum(angles[i] * radius[i] ** 2 / 2 for i in range(3)), area)
        pinned = mpmath.mpf(-9) / 1000 if s.regime is Regime.X_GE_HALF else (7 * xp**2 + 6 * xp - 1) / 1000

        def base(label: VertexLabel) -> Any:
            form = s.forms[label]
            total = mpmath.mpf(form.pinned.numerator) / form.pinned.denominator * pinned
            for kind, coeff in zip(KINDS, form.emptiness, strict=True):
                if coeff:
                    tight_area, tight_cover = _tight_values_mp(kind, dps)
                    total += mpmath.mpf(coeff.numerator) / coeff.denominator * (delta * tight_area - tight_cover)
            return total

        potential = mpmath.mpf(0)
        for i in range(3):
            pair = pair_of(radii[(i + 1) % 3], radii[(i + 2) % 3])
            q = radii[i]
            deviation = abs(angles[i] - _tight_angle_mp(q, pair))
            uncapped = base(vertex_label(q, pair)) + mpmath.mpf(s.m[q].mid) * deviation
            potential += min(mpmath.mpf(s.z[q].mid), uncapped)
        ceiling = max(mpmath.mpf(s.z[RadiusClass.LARGE].mid), mpmath.mpf(s.z[RadiusClass.SMALL].mid))
        edges = mpmath.mpf(0)
        for i in range(3):
            params = s.edge(pair_of(radii[(i + 1) % 3], radii[(i + 2) % 3]))
            transfer = mpmath.mpf(params.q.mid) * max(0, lengths[i] - mpmath.mpf(params.l.mid))
            edges += min(ceiling, transfer)
        return delta * area - cover - potential - edges
