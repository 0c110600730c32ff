# ♥♥─── Interval Arithmetic ──────────────────────────────────────────────────────
"""Closed intervals with binary64 endpoints and per-operation outward rounding.

Every operation computes the round-to-nearest result together with its exact
error term (TwoSum for sums, Dekker's TwoProduct for products) and moves an
endpoint one ulp outward only when the rounded value is not exact. There is no
global rounding-mode state, so intervals are safe to share between threads and
processes.
"""

from __future__ import annotations

from typing import Self
import math
from fractions import Fraction
from dataclasses import dataclass

from bidisc.core.errors import EmptyInterval, NegativeOperand, DivisionByIntervalContainingZero


type Real = int | float | Fraction
type Operand = Interval | Real

# ─── Error-Free Transformations ────────────────────────────────────────────────
SPLITTER = 134217729.0  # 2**27 + 1
# Outside these magnitudes Dekker splitting may overflow or lose the error term to underflow.
_TINY = 2.0**-960
_HUGE = 2.0**960
_INF = math.inf


def two_sum(a: float, b: float) -> tuple[float, float]:
    """Return (s, e) with s = fl(a + b) and s + e = a + b exactly."""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _split(a: float) -> tuple[float, float]:
    c = SPLITTER * a
    high = c - (c - a)
    return high, a - high


def two_prod(a: float, b: float) -> tuple[float, float]:
    """Return (p, e) with p = fl(a * b) and p + e = a * b exactly (no over/underflow)."""
    p = a * b
    a_hi, a_lo = _split(a)
    b_hi, b_lo = _split(b)
    err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, err


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _bracket(value: float, err: float) -> tuple[float, float]:
    """Tightest float pair enclosing value + err."""
    if err > 0:
        return value, _up(value)
    if err < 0:
        return _down(value), value
    return value, value


def _unsafe(*values: float) -> bool:
    return any(not math.isfinite(v) or (v != 0 and not _TINY <= abs(v) <= _HUGE) for v in values)


# ─── Directed Scalar Operations ────────────────────────────────────────────────
def add_bounds(a: float, b: float) -> tuple[float, float]:
    s, err = two_sum(a, b)
    if not math.isfinite(s) or not math.isfinite(err):
        return _down(s), _up(s)
    return _bracket(s, err)


def mul_bounds(a: float, b: float) -> tuple[float, float]:
    if a == 0 or b == 0:
        return 0.0, 0.0
    p, err = two_prod(a, b)
    if _unsafe(a, b, p):
        return _down(p), _up(p)
    return _bracket(p, err)


def div_bounds(a: float, b: float) -> tuple[float, float]:
    if a == 0:
        return 0.0, 0.0
    q = a / b
    if _unsafe(a, b, q):
        return _down(q), _up(q)
    p, err = two_prod(q, b)
    residual = (a - p) - err
    # sign(a/b - q) = sign(residual) * sign(b)
    direction = residual if b > 0 else -residual
    return _bracket(q, direction)


def sqrt_bounds(a: float) -> tuple[float, float]:
    if a == 0:
        return 0.0, 0.0
    s = math.sqrt(a)
    if _unsafe(a, s):
        return max(0.0, _down(s)), _up(s)
    p, err = two_prod(s, s)
    residual = (a - p) - err
    return _bracket(s, residual)


def _float_bounds(value: Real) -> tuple[float, float]:
    """Float enclosure of an exact int, float or Fraction."""
    if isinstance(value, float):
        return value, value
    approx = float(value)
    exact = Fraction(value)
    approx_exact = Fraction(approx)
    if approx_exact == exact:
        return approx, approx
    if approx_exact < exact:
        return approx, _up(approx)
    return _down(approx), approx


# ─── Interval Type ─────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class Interval:
    """A closed interval [lo, hi] of reals with exactly representable endpoints."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if math.isnan(self.lo) or math.isnan(self.hi):
            msg = "Interval endpoints must not be NaN"
            raise EmptyInterval(msg)
        if self.lo > self.hi:
            msg = f"Interval lower endpoint {self.lo!r} exceeds upper endpoint {self.hi!r}"
            raise EmptyInterval(msg)

    # ─── Constructors ──────────────────────────────────────────────────────────
    @classmethod
    def point(cls, value: Real) -> Self:
        """Enclose an exact number; floats are taken as the binary value they hold."""
        lo, hi = _float_bounds(value)
        return cls(lo, hi)

    @classmethod
    def from_bounds(cls, lo: Real, hi: Real) -> Self:
        """Enclose [lo, hi] for exact (possibly non-binary) bounds."""
        return cls(_float_bounds(lo)[0], _float_bounds(hi)[1])

    @classmethod
    def coerce(cls, value: Operand) -> Interval:
        if isinstance(value, Interval):
            return value
        return cls.point(value)

    # ─── Properties ────────────────────────────────────────────────────────────
    @property
    def width(self) -> float:
        """Upper bound of hi - lo."""
        return add_bounds(self.hi, -self.lo)[1]

    @property
    def mid(self) -> float:
        return self.lo + (self.hi - self.lo) / 2 if math.isfinite(self.hi - self.lo) else (self.lo + self.hi) / 2

    @property
    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    @property
    def is_thin(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: Operand) -> bool:
        other = Interval.coerce(value)
        return self.lo <= other.lo and other.hi <= self.hi

    def __contains__(self, value: Operand) -> bool:
        return self.contains(value)

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def overlaps(self, other: Operand) -> bool:
        o = Interval.coerce(other)
        return self.lo <= o.hi and o.lo <= self.hi

    # ─── Set Operations ────────────────────────────────────────────────────────
    def hull(self, *others: Operand) -> Interval:
        lo, hi = self.lo, self.hi
        for other in others:
            o = Interval.coerce(other)
            lo, hi = min(lo, o.lo), max(hi, o.hi)
        return Interval(lo, hi)

    def intersect(self, other: Operand) -> Interval:
        """:raises EmptyInterval: When the intervals are disjoint."""
        o = Interval.coerce(other)
        return Interval(max(self.lo, o.lo), min(self.hi, o.hi))

    def bisect(self) -> tuple[Interval, Interval]:
        m = self.mid
        if not self.lo <= m <= self.hi:
            m = self.lo
        return Interval(self.lo, m), Interval(m, self.hi)

    # ─── Arithmetic ────────────────────────────────────────────────────────────
    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __pos__(self) -> Interval:
        return self

    def __add__(self, other: Operand) -> Interval:
        o = Interval.coerce(other)
        return Interval(add_bounds(self.lo, o.lo)[0], add_bounds(self.hi, o.hi)[1])

    def __radd__(self, other: Real) -> Interval:
        return self + other

    def __sub__(self, other: Operand) -> Interval:
        return self + (-Interval.coerce(other))

    def __rsub__(self, other: Real) -> Interval:
        return Interval.coerce(other) - self

    def __mul__(self, other: Operand) -> Interval:
        o = Interval.coerce(other)
        lows: list[float] = []
        highs: list[float] = []
        for a in (self.lo, self.hi):
            for b in (o.lo, o.hi):
                lo, hi = mul_bounds(a, b)
                lows.append(lo)
                highs.append(hi)
        return Interval(min(lows), max(highs))

    def __rmul__(self, other: Real) -> Interval:
        return self * other

    def __truediv__(self, other: Operand) -> Interval:
        o = Interval.coerce(other)
        if o.contains_zero():
            msg = f"Cannot divide by {o!r}, which contains zero"
            raise DivisionByIntervalContainingZero(msg)
        lows: list[float] = []
        highs: list[float] = []
        for a in (self.lo, self.hi):
            for b in (o.lo, o.hi):
                lo, hi = div_bounds(a, b)
                lows.append(lo)
                highs.append(hi)
        return Interval(min(lows), max(highs))

    def __rtruediv__(self, other: Real) -> Interval:
        return Interval.coerce(other) / self

    def __pow__(self, exponent: int) -> Interval:
        if exponent == 2:
            return self.sqr()
        if exponent < 0:
            return 1 / (self**-exponent)
        result = Interval(1.0, 1.0)
        for _ in range(exponent):
            result *= self
        return result

    def sqr(self) -> Interval:
        """Square with the dependency handled (never negative)."""
        if self.lo >= 0:
            return Interval(mul_bounds(self.lo, self.lo)[0], mul_bounds(self.hi, self.hi)[1])
        if self.hi <= 0:
            return Interval(mul_bounds(self.hi, self.hi)[0], mul_bounds(self.lo, self.lo)[1])
        return Interval(0.0, mul_bounds(self.mag, self.mag)[1])

    def __abs__(self) -> Interval:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0.0, self.mag)

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"


# ─── Elementary Functions ──────────────────────────────────────────────────────
def sqrt_i(a: Operand) -> Interval:
    """Enclose {sqrt(t) : t in a}.

    :raises NegativeOperand: If a.lo < 0.
    """
    x = Interval.coerce(a)
    if x.lo < 0:
        msg = f"sqrt of {x!r}, which has a negative lower endpoint"
        raise NegativeOperand(msg)
    return Interval(sqrt_bounds(x.lo)[0], sqrt_bounds(x.hi)[1])


def imin(a: Operand, b: Operand) -> Interval:
    x, y = Interval.coerce(a), Interval.coerce(b)
    return Interval(min(x.lo, y.lo), min(x.hi, y.hi))


def imax(a: Operand, b: Operand) -> Interval:
    x, y = Interval.coerce(a), Interval.coerce(b)
    return Interval(max(x.lo, y.lo), max(x.hi, y.hi))


def isum(values: list[Interval] | tuple[Interval, ...]) -> Interval:
    total = Interval(0.0, 0.0)
    for value in values:
        total += value
    return total


ZERO = Interval(0.0, 0.0)
ONE = Interval(1.0, 1.0)
HALF = Interval(0.5, 0.5)
