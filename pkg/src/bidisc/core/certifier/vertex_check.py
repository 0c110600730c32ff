# ♥♥─── Vertex Inequality ────────────────────────────────────────────────────────
"""Lower bound of the potential collected around one disc centre.

The potential a disc receives from its fan only depends on how many wedges of
each neighbour pair (11, 1r, rr) surround it, so the fans are enumerated as
count triples. For a triple, the ceiling Z is reached on some sub-multiset S
of wedges; the remaining wedges pay at least m·D_S, where D_S is the distance
between the angle budget left to them and the sum of their tight angles. The
inequality holds when

    |S|·Z + sum of the free base potentials + m·D_S >= alpha_q (+ eta)

for every S.
"""

from __future__ import annotations

import math
import heapq
from typing import NamedTuple
from fractions import Fraction
from functools import lru_cache
from itertools import count, product
from dataclasses import dataclass

from bidisc.custom_logger import log
from bidisc.core.errors import DegenerateBox, CalibrationFailed, UncalibratedScheme
from bidisc.core.geometry import triangle_angle, triangle_inequality_fails
from bidisc.core.interval import ZERO, TWO_PI, Interval, imax, imin, isum
from bidisc.core.packing import GOOD_WORDS, NeighborhoodWord
from bidisc.core.models.base_enums import PairClass, RadiusClass
from bidisc.core.certifier.boxes import TriangleBox, root_box, subdivide, support_radius_excluded
from bidisc.core.certifier.scheme import AffineForm, PotentialScheme
from bidisc.core.certifier.potentials import tight_angle, vertex_label


PAIRS = (PairClass.P11, PairClass.P1R, PairClass.PRR)
ANGLE_PIECES = 4
ANGLE_TOLERANCE = 1e-2
WEDGE_BUDGET = 20_000
WEDGE_DEPTH = 40
M_GRID = tuple(Fraction(j, 10) for j in range(1, 21))
Z_STEP = 0.05
Z_STEPS = 60
Z_DIVISOR = {RadiusClass.LARGE: 8, RadiusClass.SMALL: 4}


# ─── Wedges ────────────────────────────────────────────────────────────────────
def _pair_members(pair: PairClass) -> tuple[RadiusClass, RadiusClass]:
    first, second = (RadiusClass.from_letter(letter) for letter in pair.value)
    return first, second


@lru_cache(maxsize=8)
def wedge_angle_range(own: RadiusClass, pair: PairClass) -> Interval:
    """Range of the angle at a disc of class ``own`` between two consecutive neighbours.

    Each end of the range comes from a best-first search over the root box of
    the wedge triangle: the sub-box with the most extreme angle enclosure is
    split until that enclosure is narrow, and sub-boxes that are not triangles
    or admit no support circle of radius at most r are dropped.

    :raises DegenerateBox: If no wedge is admissible or the angle is not bounded away from 0.
    """
    a, b = _pair_members(pair)
    root = root_box((own, a, b))
    low, high = _extreme_angle(root, upper=False), _extreme_angle(root, upper=True)
    if low <= 0:
        msg = f"wedge angle at a {own} disc between {pair} neighbours is not bounded away from 0"
        raise DegenerateBox(msg)
    log.debug("wedge angle at a {} disc between {} neighbours: [{}, {}]", own, pair, low, high)
    return Interval(low, high)


def _wedge_angle(box: TriangleBox) -> Interval | None:
    spec = box.spec
    if triangle_inequality_fails(spec) or support_radius_excluded(spec):
        return None
    try:
        return triangle_angle(spec, 0)
    except DegenerateBox:
        return None


def _extreme_angle(root: TriangleBox, upper: bool) -> float:
    """Rigorous lower (or upper) bound of the vertex-0 angle over the admissible part of ``root``."""
    sign = -1.0 if upper else 1.0
    heap: list[tuple[float, int, TriangleBox, Interval]] = []
    order = count()

    def push(box: TriangleBox) -> None:
        angle = _wedge_angle(box)
        if angle is not None:
            heapq.heappush(heap, (sign * (angle.hi if upper else angle.lo), next(order), box, angle))

    for spec in subdivide(root, ANGLE_PIECES):
        push(TriangleBox(spec))
    for _ in range(WEDGE_BUDGET):
        if not heap:
            break
        key, _, box, angle = heapq.heappop(heap)
        if box.depth >= WEDGE_DEPTH or (angle.width <= ANGLE_TOLERANCE and (upper or key > 0)):
            return sign * key
        for child in box.split():
            push(child)
    if not heap:
        msg = f"no admissible wedge in {root.spec.radii}"
        raise DegenerateBox(msg)
    return sign * heap[0][0]


class Fan(NamedTuple):
    """Numbers of 11, 1r and rr wedges around a disc."""

    n11: int
    n1r: int
    nrr: int

    @property
    def size(self) -> int:
        return self.n11 + self.n1r + self.nrr

    @property
    def realisable(self) -> bool:
        """Whether some cyclic word over {1, r} has these pair counts."""
        if self.n1r % 2:
            return False
        if self.n1r == 0:
            return (self.n11 > 0) != (self.nrr > 0)
        return True

    def word(self) -> NeighborhoodWord:
        """One cyclic neighbourhood word with these pair counts."""
        if self.n1r == 0:
            return NeighborhoodWord("1" * self.n11 or "r" * self.nrr)
        runs = self.n1r // 2
        return NeighborhoodWord("1" * (self.n11 + 1) + "r" * (self.nrr + 1) + "1r" * (runs - 1))


def good_fans(q: RadiusClass, s: PotentialScheme) -> frozenset[Fan]:
    return frozenset(Fan(*word.pair_counts()) for word in GOOD_WORDS[s.regime, q])


def _ranges(q: RadiusClass) -> list[Interval]:
    return [wedge_angle_range(q, pair) for pair in PAIRS]


@lru_cache(maxsize=2)
def fans(q: RadiusClass) -> tuple[Fan, ...]:
    """Realisable fans whose angle ranges can close up to 2·pi."""
    ranges = _ranges(q)
    longest = math.floor(TWO_PI.hi / min(r.lo for r in ranges))
    result = []
    for n11, n1r, nrr in product(range(longest + 1), repeat=3):
        fan = Fan(n11, n1r, nrr)
        if not 3 <= fan.size <= longest or not fan.realisable:
            continue
        low = isum([Interval.point(r.lo) * n for r, n in zip(ranges, fan, strict=True)])
        high = isum([Interval.point(r.hi) * n for r, n in zip(ranges, fan, strict=True)])
        if low.lo <= TWO_PI.hi and high.hi >= TWO_PI.lo:
            result.append(fan)
    log.debug("{} fans around a {} disc, up to {} wedges", len(result), q, longest)
    return tuple(result)


# ─── Capped Subsets ────────────────────────────────────────────────────────────
class CapTerm(NamedTuple):
    """A fan with the wedges in ``capped`` at the ceiling and the free deviation lower bound."""

    fan: Fan
    capped: Fan
    deviation: float

    @property
    def free(self) -> Fan:
        return Fan(*(n - c for n, c in zip(self.fan, self.capped, strict=True)))


def _deviation(q: RadiusClass, fan: Fan, capped: Fan) -> float | None:
    """Lower bound of D_S, or None when the capped wedges leave an empty angle budget."""
    ranges = _ranges(q)
    tights = [tight_angle(q, pair) for pair in PAIRS]
    free = [n - c for n, c in zip(fan, capped, strict=True)]
    free_lo = isum([Interval.point(r.lo) * n for r, n in zip(ranges, free, strict=True)])
    free_hi = isum([Interval.point(r.hi) * n for r, n in zip(ranges, free, strict=True)])
    capped_lo = isum([Interval.point(r.lo) * n for r, n in zip(ranges, capped, strict=True)])
    capped_hi = isum([Interval.point(r.hi) * n for r, n in zip(ranges, capped, strict=True)])
    budget_lo = imax(free_lo, TWO_PI - capped_hi).lo
    budget_hi = imin(free_hi, TWO_PI - capped_lo).hi
    if budget_lo > budget_hi:
        return None
    if not any(free):
        return 0.0
    target = isum([t * n for t, n in zip(tights, free, strict=True)])
    below = (Interval.point(budget_lo) - target).lo
    above = (target - Interval.point(budget_hi)).lo
    return max(0.0, below, above)


@lru_cache(maxsize=2)
def cap_terms(q: RadiusClass) -> tuple[CapTerm, ...]:
    """Every (fan, capped sub-multiset) pair with a nonempty angle budget."""
    terms = []
    for fan in fans(q):
        for capped in product(*(range(n + 1) for n in fan)):
            sub = Fan(*capped)
            deviation = _deviation(q, fan, sub)
            if deviation is not None:
                terms.append(CapTerm(fan, sub, deviation))
    return tuple(terms)


# ─── Checking ──────────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class VertexCheck:
    """Outcome of the vertex inequality for one disc class."""

    q: RadiusClass
    passed: bool
    checked: int
    witness: NeighborhoodWord | None = None
    capped: Fan | None = None
    margin: Interval | None = None


def free_form(s: PotentialScheme, q: RadiusClass, free: Fan) -> AffineForm:
    """sum of the free base potentials minus alpha_q, as an exact form."""
    form = -s.alpha_forms[q]
    for pair, n in zip(PAIRS, free, strict=True):
        if n:
            form = form + n * s.forms[vertex_label(q, pair)]
    return form


class _Bases:
    """Memoised base values per free multiset, with exact zeros kept exact."""

    def __init__(self, s: PotentialScheme, q: RadiusClass) -> None:
        self.s, self.q = s, q
        self.cache: dict[Fan, tuple[Interval, bool]] = {}

    def __call__(self, free: Fan) -> tuple[Interval, bool]:
        if free not in self.cache:
            form = free_form(self.s, self.q, free)
            self.cache[free] = (ZERO, True) if form.is_zero else (self.s.evaluate(form), False)
        return self.cache[free]


def _margin(term: CapTerm, base: Interval, m: Interval, z: Interval, eta: Interval) -> Interval:
    return z * sum(term.capped) + base + m * term.deviation - eta


def verify_vertex_inequality(s: PotentialScheme, q: RadiusClass, strengthened: bool) -> VertexCheck:
    """Check sum of vertex potentials >= alpha_q around every admissible fan of a q-disc.

    :param s: A calibrated scheme.
    :param q: Class of the centre disc.
    :param strengthened: Require alpha_q + eta around bad neighbourhoods.
    :returns: The outcome, with the first failing fan as witness.
    :raises UncalibratedScheme: If m or Z is missing.
    """
    if s.m is None or s.z is None:
        msg = "the vertex inequality needs calibrated m and Z"
        raise UncalibratedScheme(msg)
    m, z = s.m[q], s.z[q]
    good = good_fans(q, s)
    bases = _Bases(s, q)
    terms = cap_terms(q)
    for term in terms:
        eta = Interval.point(s.eta) if strengthened and term.fan not in good else ZERO
        base, exact = bases(term.free)
        if exact and not any(term.capped) and eta == ZERO:
            continue
        margin = _margin(term, base, m, z, eta)
        if margin.lo < 0:
            log.debug("vertex inequality fails for a {} disc with fan {} (capped {}): {}", q, term.fan.word(), term.capped, margin)
            return VertexCheck(q, passed=False, checked=len(terms), witness=term.fan.word(), capped=term.capped, margin=margin)
    return VertexCheck(q, passed=True, checked=len(terms))


# ─── Calibration ───────────────────────────────────────────────────────────────
def _ceiling_for(s: PotentialScheme, q: RadiusClass, m: Interval) -> tuple[float | None, CapTerm | None]:
    """Smallest grid ceiling that passes with coefficient ``m``, or the term that blocks it."""
    good = good_fans(q, s)
    bases = _Bases(s, q)
    eta = Interval.point(s.eta)
    needed, hardest = -math.inf, None
    for term in cap_terms(q):
        extra = ZERO if term.fan in good else eta
        base, exact = bases(term.free)
        rest = base + m * term.deviation - extra
        if not any(term.capped):
            if (exact and extra == ZERO) or rest.lo >= 0:
                continue
            return None, term
        ceiling = ((-rest) / sum(term.capped)).hi
        if ceiling > needed:
            needed, hardest = ceiling, term
    start = s.alphas[q].hi / Z_DIVISOR[q]
    for k in range(Z_STEPS + 1):
        z = start + k * Z_STEP
        if z >= needed:
            return z, None
    return None, hardest


def calibrate_m_Z(s: PotentialScheme) -> PotentialScheme:  # noqa: N802
    """Pick angle coefficients and ceilings that make the vertex inequality hold.

    For each disc class the coefficients m = 0.1, 0.2, ..., 2 are tried in
    increasing order; for each, the least ceiling alpha_q/d + k·0.05
    (d = 8 for large, 4 for small discs) clearing every capped subset is
    taken. The result is then re-checked rigorously with and without eta.

    :raises CalibrationFailed: If no candidate passes, with the blocking fan.
    """
    chosen: dict[RadiusClass, tuple[Interval, Interval]] = {}
    for q in RadiusClass:
        blocking: CapTerm | None = None
        for step in M_GRID:
            m = Interval.point(step)
            z, blocking = _ceiling_for(s, q, m)
            if z is not None:
                chosen[q] = (m, Interval.point(z))
                break
        else:
            info = {"disc": q.value, "neighbourhood": str(blocking.fan.word()) if blocking else None, "capped": list(blocking.capped) if blocking else None}
            msg = f"no angle coefficient and ceiling satisfy the vertex inequality for {q} discs on {s.x}"
            raise CalibrationFailed(msg, blocking=info)
    (m_1, z_1), (m_r, z_r) = chosen[RadiusClass.LARGE], chosen[RadiusClass.SMALL]
    calibrated = s.with_calibration(m_1, m_r, z_1, z_r)
    for q in RadiusClass:
        for strengthened in (False, True):
            check = verify_vertex_inequality(calibrated, q, strengthened)
            if not check.passed:
                msg = f"calibrated scheme fails the vertex inequality for {q} discs around {check.witness}"
                raise CalibrationFailed(msg, blocking={"disc": q.value, "neighbourhood": str(check.witness), "capped": list(check.capped or ())})
    log.debug("calibrated {}: m=({}, {}) Z=({}, {})", s.x, m_1.lo, m_r.lo, z_1.lo, z_r.lo)
    return calibrated
