# ♥♥─── Triangle Boxes ───────────────────────────────────────────────────────────
"""Side-length boxes explored by the dichotomy and the support-radius prune."""

from __future__ import annotations

from dataclasses import dataclass

from bidisc.core.geometry import TriangleSpec, heron_factors
from bidisc.core.interval import ONE, R, ZERO, Interval, sqrt_i
from bidisc.core.models.base_enums import RadiusClass, TightTriangleKind
from bidisc.core.geometry.density import TIGHT_RADII


type Radii = tuple[RadiusClass, RadiusClass, RadiusClass]

SUPPORT_PIECES = 8


@dataclass(frozen=True, slots=True)
class TriangleBox:
    """A box of triangles with fixed radius classes and the dichotomy depth it was reached at."""

    spec: TriangleSpec
    depth: int = 0

    def split(self) -> tuple[TriangleBox, TriangleBox]:
        """Halve the widest side."""
        i = self.spec.widest_side()
        low, high = self.spec.sides[i].bisect()
        return TriangleBox(self.spec.with_side(i, low), self.depth + 1), TriangleBox(self.spec.with_side(i, high), self.depth + 1)

    @property
    def width(self) -> float:
        return max(side.width for side in self.spec.sides)


def root_box(radii: Radii) -> TriangleBox:
    """Sides from the tight length up to tight + 2r, the bound for a saturated packing."""
    tight = TriangleSpec(radii, (ZERO, ZERO, ZERO))
    sides = [Interval(tight.radius_sum(i).lo, (tight.radius_sum(i) + 2 * R).hi) for i in range(3)]
    return TriangleBox(TriangleSpec(radii, (sides[0], sides[1], sides[2])))


def root_boxes() -> dict[TightTriangleKind, TriangleBox]:
    return {kind: root_box(radii) for kind, radii in TIGHT_RADII.items()}


def subdivide(box: TriangleBox, pieces: int) -> list[TriangleSpec]:
    """Regular grid of ``pieces**3`` sub-boxes covering the box."""

    def cut(side: Interval) -> list[Interval]:
        step = (side.hi - side.lo) / pieces
        marks = [side.lo + k * step for k in range(pieces)] + [side.hi]
        return [Interval(marks[k], marks[k + 1]) for k in range(pieces)]

    a, b, c = (cut(side) for side in box.spec.sides)
    return [TriangleSpec(box.spec.radii, (sa, sb, sc)) for sa in a for sb in b for sc in c]


# ─── Support Radius ────────────────────────────────────────────────────────────
def support_equation(t: TriangleSpec, rho: Interval) -> Interval:
    """Enclosure of g(rho), which vanishes iff a circle of radius rho touches the three discs.

    Vertex 0 sits at the origin and vertex 1 at (c, 0). With N = 2c·px and the
    height v of vertex 2, g = 4v²·(px² - (rho + r0)²) + (2v·py)², where both px
    and 2v·py are affine in rho.
    """
    a, b, c = t.sides
    r0, r1, r2 = (t.radius(i) for i in range(3))
    product = ONE
    for factor in heron_factors(t):
        product *= Interval(max(factor.lo, 0.0), max(factor.hi, 0.0))
    c2 = c.sqr()
    n = c2 + (r0 - r1) * (2 * rho + r0 + r1)
    px = n / (2 * c)
    cross = b.sqr() - (b.sqr() + c2 - a.sqr()) * n / (2 * c2) + (r0 - r2) * (2 * rho + r0 + r2)
    return product / c2 * (px.sqr() - (rho + r0).sqr()) + cross.sqr()


def _nonnegative(a: Interval) -> Interval:
    return Interval(max(a.lo, 0.0), a.hi)


def two_circle_excluded(t: TriangleSpec, rho: Interval) -> bool:
    """True when no circle of radius in ``rho`` touches the three discs.

    For each vertex pair (i, j), the circles touching discs i and j have their
    centre at abscissa X along ViVj and height ±Y; the third centre must then
    lie at distance rho + r_k. Unlike g, this stays sharp on flat boxes.
    """
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        d, d_ik, d_jk = t.sides[k], t.sides[j], t.sides[i]
        r_i, r_j, r_k = t.radius(i), t.radius(j), t.radius(k)
        x = (d.sqr() + (r_i - r_j) * (2 * rho + r_i + r_j)) / (2 * d)
        y2 = (rho + r_i).sqr() - x.sqr()
        if y2.hi < 0:
            return True
        x_k = (d_ik.sqr() + d.sqr() - d_jk.sqr()) / (2 * d)
        h2 = d_ik.sqr() - x_k.sqr()
        if h2.hi < 0:
            return True
        y, h = sqrt_i(_nonnegative(y2)), sqrt_i(_nonnegative(h2))
        near = ((x - x_k).sqr() + (y - h).sqr()).lo
        far = ((x - x_k).sqr() + (y + h).sqr()).hi
        if not (rho + r_k).sqr().overlaps(Interval(near, far)):
            return True
    return False


def support_radius_excluded(t: TriangleSpec, pieces: int = SUPPORT_PIECES) -> bool:
    """True when no circle of radius in [0, r] can touch the three discs anywhere in the box."""
    step = R.hi / pieces
    for k in range(pieces):
        rho = Interval(k * step, R.hi if k == pieces - 1 else (k + 1) * step)
        if support_equation(t, rho).contains_zero() and not two_circle_excluded(t, rho):
            return False
    return True
