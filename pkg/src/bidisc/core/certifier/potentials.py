# ♥♥─── Vertex and Edge Potentials ─────────────────────────────────────────────
from __future__ import annotations

from enum import StrEnum
from functools import lru_cache

from bidisc.core.errors import UncalibratedScheme
from bidisc.core.geometry import TriangleSpec, triangle_area, triangle_angle, large_angle_in_1rr
from bidisc.core.interval import PI, ZERO, Interval, imax, imin
from bidisc.core.models.base_enums import PairClass, RadiusClass, VertexLabel
from bidisc.core.certifier.scheme import PotentialScheme, pair_class


L, S = RadiusClass.LARGE, RadiusClass.SMALL


class EdgeSide(StrEnum):
    """Role of a triangle in the transfer across one of its edges."""

    DONOR = "donor"
    RECEIVER = "receiver"
    TIE = "tie"


# ─── Labels ────────────────────────────────────────────────────────────────────
def pair_of(a: RadiusClass, b: RadiusClass) -> PairClass:
    letters = "".join(sorted(a.letter + b.letter))
    return PairClass(letters)


VERTEX_LABELS: dict[tuple[RadiusClass, PairClass], VertexLabel] = {
    (L, PairClass.P11): VertexLabel.V111,
    (L, PairClass.P1R): VertexLabel.V11R,
    (L, PairClass.PRR): VertexLabel.VR1R,
    (S, PairClass.P11): VertexLabel.V1R1,
    (S, PairClass.P1R): VertexLabel.V1RR,
    (S, PairClass.PRR): VertexLabel.VRRR,
}


def vertex_label(own: RadiusClass, neighbours: PairClass) -> VertexLabel:
    """Label of a vertex of class ``own`` whose two triangle neighbours form ``neighbours``."""
    return VERTEX_LABELS[own, neighbours]


def label_at(t: TriangleSpec, i: int) -> VertexLabel:
    return vertex_label(t.radii[i], pair_of(t.radii[(i + 1) % 3], t.radii[(i + 2) % 3]))


@lru_cache(maxsize=8)
def tight_angle(own: RadiusClass, neighbours: PairClass) -> Interval:
    """Angle at a vertex of the tight triangle with this radius triple."""
    match own, neighbours:
        case RadiusClass.LARGE, PairClass.P11:
            return PI / 3
        case RadiusClass.LARGE, PairClass.P1R:
            return PI / 4
        case RadiusClass.LARGE, PairClass.PRR:
            return large_angle_in_1rr()
        case RadiusClass.SMALL, PairClass.P11:
            return PI / 2
        case RadiusClass.SMALL, PairClass.P1R:
            return (PI - large_angle_in_1rr()) / 2
        case _:
            return PI / 3


def tight_angle_at(t: TriangleSpec, i: int) -> Interval:
    return tight_angle(t.radii[i], pair_of(t.radii[(i + 1) % 3], t.radii[(i + 2) % 3]))


# ─── Vertex Potential ──────────────────────────────────────────────────────────
def _calibration(s: PotentialScheme, q: RadiusClass) -> tuple[Interval, Interval]:
    if s.m is None or s.z is None:
        msg = "the scheme has no angle coefficients or ceilings yet"
        raise UncalibratedScheme(msg)
    return s.m[q], s.z[q]


def deviation_potential(s: PotentialScheme, q: RadiusClass, label: VertexLabel, deviation: Interval, *, capped: bool = True) -> Interval:
    """min(Z_q, V_label + m_q·deviation) for a nonnegative angle deviation."""
    m, z = _calibration(s, q)
    value = s.potential(label) + m * deviation
    return imin(z, value) if capped else value


def vertex_potential(s: PotentialScheme, t: TriangleSpec, v: int, angle: Interval | None = None, *, capped: bool = True) -> Interval:
    """Potential credited to vertex ``v`` of the triangle box.

    :param s: A calibrated scheme.
    :param t: The triangle box.
    :param v: Vertex index.
    :param angle: Enclosure of the angle at ``v`` when already known.
    :param capped: Apply the ceiling Z.
    :raises UncalibratedScheme: If m or Z is missing.
    """
    theta = triangle_angle(t, v) if angle is None else angle
    deviation = abs(theta - tight_angle_at(t, v))
    return deviation_potential(s, t.radii[v], label_at(t, v), deviation, capped=capped)


# ─── Edge Potential ────────────────────────────────────────────────────────────
def edge_transfer(s: PotentialScheme, pair: PairClass | str, length: Interval) -> Interval:
    """Magnitude min(max(Z_1, Z_r), q·max(0, |e| - l)) of the transfer across an edge.

    :raises UnknownPairClass: For an unknown pair.
    """
    params = s.edge(pair_class(pair))
    excess = imax(ZERO, length - params.l)
    raw = params.q * excess
    if s.z is None:
        return raw
    return imin(imax(s.z[L], s.z[S]), raw)


def edge_side(own_clearance: Interval, other_clearance: Interval) -> EdgeSide:
    """The triangle whose third disc stands farther from the edge donates; overlap is a tie."""
    if own_clearance.lo > other_clearance.hi:
        return EdgeSide.DONOR
    if own_clearance.hi < other_clearance.lo:
        return EdgeSide.RECEIVER
    return EdgeSide.TIE


def edge_potential(s: PotentialScheme, pair: PairClass | str, length: Interval, side: EdgeSide) -> Interval:
    """Share of the edge transfer charged to one incident triangle; the two sides sum to 0."""
    transfer = edge_transfer(s, pair, length)
    match side:
        case EdgeSide.DONOR:
            return transfer
        case EdgeSide.RECEIVER:
            return -transfer
        case _:
            return ZERO


def third_vertex_clearance(t: TriangleSpec, edge: int, area: Interval | None = None) -> Interval:
    """Distance from the disc opposite side ``edge`` to the side's line, minus that disc's radius."""
    area = triangle_area(t) if area is None else area
    return 2 * area / t.sides[edge] - t.radius(edge)


def edge_pair(t: TriangleSpec, edge: int) -> PairClass:
    return pair_of(t.radii[(edge + 1) % 3], t.radii[(edge + 2) % 3])


def worst_edge_charge(s: PotentialScheme, t: TriangleSpec) -> Interval:
    """Upper bound of the edge charges of a triangle whose neighbours are unknown (each edge donates)."""
    return sum((imax(ZERO, edge_transfer(s, edge_pair(t, i), t.sides[i])) for i in range(3)), ZERO)
