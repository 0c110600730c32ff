# ♥♥─── Interval arccos ──────────────────────────────────────────────────────────
from __future__ import annotations

import math
from functools import lru_cache

from bidisc.core.errors import OperandOutsideMinusOneOne

from .interval import Interval, Operand
from .constants import iv_context, interval_from_mp


ACOS_PRECISION_BITS = 64


def _clamp_unit(a: Interval) -> Interval:
    lo, hi = a.lo, a.hi
    below, above = math.nextafter(-1.0, -math.inf), math.nextafter(1.0, math.inf)
    if lo < below or hi > above or lo > above or hi < below:
        msg = f"arccos operand {a!r} leaves [-1, 1] by more than one ulp"
        raise OperandOutsideMinusOneOne(msg)
    return Interval(min(max(lo, -1.0), 1.0), min(max(hi, -1.0), 1.0))


@lru_cache(maxsize=1 << 16)
def _acos_point(c: float) -> Interval:
    """arccos of a binary64 cosine as atan2(sqrt(1 - c**2), c) in mpmath interval arithmetic."""
    ctx = iv_context(ACOS_PRECISION_BITS)
    x = ctx.mpf(c)
    return interval_from_mp(ctx.atan2(ctx.sqrt((1 - x) * (1 + x)), x))


def acos_i(a: Operand) -> Interval:
    """Enclose {arccos t : t in a}.

    Operands that exceed [-1, 1] by at most one ulp are clamped first.

    :param a: Cosine enclosure.
    :returns: Angle enclosure in [0, pi].
    :raises OperandOutsideMinusOneOne: For larger excursions.
    """
    c = _clamp_unit(Interval.coerce(a))
    low = 0.0 if c.hi == 1.0 else max(0.0, _acos_point(c.hi).lo)
    return Interval(low, _acos_point(c.lo).hi)
