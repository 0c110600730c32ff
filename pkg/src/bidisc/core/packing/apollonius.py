# ♥♥─── Apollonius Predicates ───────────────────────────────────────────────────
"""Support circles of disc triples and the in-circle test for FM triangles.

A ccw triple of discs (c_i, r_i) has a support circle (p, rho) externally
tangent to all three: |p - c_i| = rho + r_i. With c_1 moved to the origin,
p = P0 + rho·P1 for the 2x2 system p·c_i = k_i + rho·l_i, and rho solves
A·rho**2 + 2·B·rho + C = 0. A fourth disc conflicts with the triangle when
|p - c_d|**2 < (rho + r_d)**2.

Everything is evaluated in a numeric "kit": binary64 intervals first, then
mpmath intervals at 106 and 212 bits. A kit raises ``Undecided`` whenever a
sign it needs is not determined.
"""

from __future__ import annotations

from typing import Any, Protocol
from functools import lru_cache
from dataclasses import dataclass
from collections.abc import Callable

from bidisc.core.interval import Interval, sqrt_i
from bidisc.core.packing.packing import Packing
from bidisc.core.models.base_enums import RadiusClass
from bidisc.core.interval.constants import ConstantName, mp_bounds, iv_context, mp_constant


type Triple = tuple[int, int, int]

ESCALATION_BITS = (106, 212)


class Undecided(Exception):  # noqa: N818
    """A sign could not be determined at the current precision."""


# ─── Kits ──────────────────────────────────────────────────────────────────────
class Kit(Protocol):
    name: str

    def const(self, value: float) -> Any: ...
    def radius(self, size: RadiusClass) -> Any: ...
    def sign(self, value: Any) -> int: ...
    def div(self, a: Any, b: Any) -> Any: ...
    def sqrt(self, value: Any) -> Any: ...


class FloatIntervalKit:
    name = "binary64"

    def const(self, value: float) -> Interval:
        return Interval(value, value)

    def radius(self, size: RadiusClass) -> Interval:
        return size.radius()

    def sign(self, value: Interval) -> int:
        if value.lo > 0:
            return 1
        if value.hi < 0:
            return -1
        raise Undecided

    def div(self, a: Interval, b: Interval) -> Interval:
        if b.contains_zero():
            raise Undecided
        return a / b

    def sqrt(self, value: Interval) -> Interval:
        if value.lo < 0:
            raise Undecided
        return sqrt_i(value)


class MpIntervalKit:
    def __init__(self, precision_bits: int) -> None:
        self.name = f"mpmath-{precision_bits}"
        self.ctx = iv_context(precision_bits)
        self._small = mp_constant(ConstantName.R, precision_bits)

    def const(self, value: float) -> Any:
        return self.ctx.mpf(value)

    def radius(self, size: RadiusClass) -> Any:
        return self.ctx.mpf(1) if size is RadiusClass.LARGE else self._small

    def sign(self, value: Any) -> int:
        lo, hi = mp_bounds(value)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        raise Undecided

    def div(self, a: Any, b: Any) -> Any:
        lo, hi = mp_bounds(b)
        if lo <= 0 <= hi:
            raise Undecided
        return a / b

    def sqrt(self, value: Any) -> Any:
        lo, _ = mp_bounds(value)
        if lo < 0:
            raise Undecided
        return self.ctx.sqrt(value)


@lru_cache(maxsize=1)
def kits() -> tuple[Kit, ...]:
    return (FloatIntervalKit(), *(MpIntervalKit(bits) for bits in ESCALATION_BITS))


def decide[T](predicate: Callable[[Kit], T]) -> T | None:
    """Evaluate with increasing precision; None when even the last kit is undecided."""
    for kit in kits():
        try:
            return predicate(kit)
        except Undecided:
            continue
    return None


# ─── Support Circle ────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class SupportCircle:
    """Centre and radius of the circle tangent to the three discs (binary64 midpoints)."""

    x: float
    y: float
    rho: float


class _Support:
    """Support circle of a triple in kit coordinates translated to the first disc."""

    def __init__(self, kit: Kit, p: Packing, triple: Triple) -> None:
        self.kit = kit
        self.packing = p
        self.triple = triple
        self.origin = p.centers[triple[0]]
        radii = [kit.radius(p[index].size) for index in triple]
        points = [self.translate(index) for index in triple]
        (x2, y2), (x3, y3) = points[1], points[2]
        r1, r2, r3 = radii
        det = x2 * y3 - y2 * x3
        k2 = (x2 * x2 + y2 * y2 - r2 * r2 + r1 * r1) / 2
        k3 = (x3 * x3 + y3 * y3 - r3 * r3 + r1 * r1) / 2
        l2, l3 = r1 - r2, r1 - r3
        p0x = kit.div(y3 * k2 - y2 * k3, det)
        p0y = kit.div(x2 * k3 - x3 * k2, det)
        p1x = kit.div(y3 * l2 - y2 * l3, det)
        p1y = kit.div(x2 * l3 - x3 * l2, det)
        a = p1x * p1x + p1y * p1y - 1
        b = p0x * p1x + p0y * p1y - r1
        c = p0x * p0x + p0y * p0y - r1 * r1
        self.points, self.radii = points, radii
        self.rho: Any = None
        self.px: Any = None
        self.py: Any = None
        for rho in self._roots(a, b, c):
            if kit.sign(rho) < 0:
                continue
            px, py = p0x + rho * p1x, p0y + rho * p1y
            if self._orientation(px, py, rho) > 0:
                self.rho, self.px, self.py = rho, px, py
                break

    def translate(self, index: int) -> tuple[Any, Any]:
        x, y = self.packing.centers[index]
        return self.kit.const(float(x)) - self.kit.const(float(self.origin[0])), self.kit.const(float(y)) - self.kit.const(float(self.origin[1]))

    def _roots(self, a: Any, b: Any, c: Any) -> list[Any]:
        kit = self.kit
        discriminant = b * b - a * c
        if kit.sign(discriminant) < 0:
            return []
        root = kit.sqrt(discriminant)
        roots = []
        # Each root has two algebraically equal forms; use whichever denominator is decided.
        for numerator, conjugate in ((-b - root, -b + root), (-b + root, -b - root)):
            try:
                roots.append(kit.div(numerator, a))
            except Undecided:
                roots.append(kit.div(c, conjugate))
        return roots

    def _orientation(self, px: Any, py: Any, rho: Any) -> int:
        u = [(x - px, y - py) for x, y in self.points]
        total = None
        for n in range(3):
            (ax, ay), (bx, by) = u[n], u[(n + 1) % 3]
            term = (ax * by - ay * bx) * (rho + self.radii[(n + 2) % 3])
            total = term if total is None else total + term
        return self.kit.sign(total)

    @property
    def exists(self) -> bool:
        return self.rho is not None

    def power(self, index: int) -> Any:
        """|p - c_d|**2 - (rho + r_d)**2; negative means the disc conflicts with the circle."""
        x, y = self.translate(index)
        dx, dy = x - self.px, y - self.py
        reach = self.rho + self.kit.radius(self.packing[index].size)
        return dx * dx + dy * dy - reach * reach


def _midpoint(value: Any) -> float:
    if isinstance(value, Interval):
        return value.mid
    lo, hi = mp_bounds(value)
    return float((lo + hi) / 2)


def support_circle(p: Packing, triple: Triple) -> SupportCircle | None:
    """Support circle of a ccw triple, or None if the triple has none."""

    def evaluate(kit: Kit) -> SupportCircle | None:
        support = _Support(kit, p, triple)
        if not support.exists:
            return None
        ox, oy = p.centers[triple[0]]
        return SupportCircle(float(ox) + _midpoint(support.px), float(oy) + _midpoint(support.py), _midpoint(support.rho))

    return decide(evaluate)


# ─── Predicates ────────────────────────────────────────────────────────────────
def orientation(p: Packing, a: int, b: int, c: int) -> int:
    """Sign of the turn a -> b -> c; 0 when undecided at every precision."""

    def evaluate(kit: Kit) -> int:
        (ax, ay), (bx, by), (cx, cy) = ((kit.const(float(v[0])), kit.const(float(v[1]))) for v in p.centers[[a, b, c]])
        return kit.sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))

    result = decide(evaluate)
    return 0 if result is None else result


def in_conflict(p: Packing, triple: Triple, d: int) -> bool | None:
    """Whether disc ``d`` violates the empty support circle of ``triple``.

    A triple without a support circle is reported as in conflict. None means a
    tie at the final precision.
    """

    def evaluate(kit: Kit) -> bool:
        support = _Support(kit, p, triple)
        if not support.exists:
            return True
        return kit.sign(support.power(d)) < 0

    return decide(evaluate)


def conflicting_discs(p: Packing, triple: Triple, candidates: list[int]) -> list[int]:
    """Candidates that conflict with the support circle (ties count as no conflict)."""

    def evaluate(kit: Kit) -> list[int]:
        support = _Support(kit, p, triple)
        if not support.exists:
            return list(candidates)
        found = []
        for d in candidates:
            try:
                if kit.sign(support.power(d)) < 0:
                    found.append(d)
            except Undecided:
                if kit is kits()[-1]:
                    continue
                raise
        return found

    result = decide(evaluate)
    return [] if result is None else result

