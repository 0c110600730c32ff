# ♥♥─── Constant Enclosures ──────────────────────────────────────────────────────
"""Verified enclosures of pi, sqrt(2), sqrt(3), r = sqrt(2) - 1 and r**2.

The enclosures come from mpmath interval arithmetic at the requested precision
and are rounded outward to binary64 endpoints. Values are cached per precision.
"""

from __future__ import annotations

from typing import Any
import math
from enum import StrEnum
from functools import lru_cache

import mpmath
from mpmath.ctx_iv import MPIntervalContext

from .interval import Interval


# ─── Names ─────────────────────────────────────────────────────────────────────
class ConstantName(StrEnum):
    PI = "pi"
    SQRT2 = "sqrt2"
    SQRT3 = "sqrt3"
    R = "r"
    R_SQUARED = "r_squared"


MIN_PRECISION_BITS = 53


# ─── mpmath Bridge ─────────────────────────────────────────────────────────────
@lru_cache(maxsize=16)
def iv_context(precision_bits: int) -> Any:
    """Return a private mpmath interval context working at ``precision_bits``."""
    ctx = MPIntervalContext()
    ctx.prec = precision_bits
    return ctx


def mp_bounds(value: Any) -> tuple[Any, Any]:
    """Exact endpoints of an mpmath interval as mpf values (no re-rounding)."""
    raw_lo, raw_hi = value._mpi_  # noqa: SLF001
    return mpmath.mp.make_mpf(raw_lo), mpmath.mp.make_mpf(raw_hi)


def interval_from_mp(value: Any) -> Interval:
    """Round an mpmath interval outward to binary64 endpoints."""
    lo_mp, hi_mp = mp_bounds(value)
    lo = float(lo_mp)
    if mpmath.mpf(lo) > lo_mp:
        lo = math.nextafter(lo, -math.inf)
    hi = float(hi_mp)
    if mpmath.mpf(hi) < hi_mp:
        hi = math.nextafter(hi, math.inf)
    return Interval(lo, hi)


def _mp_constant(name: ConstantName, ctx: Any) -> Any:
    match name:
        case ConstantName.PI:
            return ctx.pi
        case ConstantName.SQRT2:
            return ctx.sqrt(2)
        case ConstantName.SQRT3:
            return ctx.sqrt(3)
        case ConstantName.R:
            return ctx.sqrt(2) - 1
        case ConstantName.R_SQUARED:
            return 3 - 2 * ctx.sqrt(2)


def mp_constant(name: ConstantName, precision_bits: int) -> Any:
    """The constant as an mpmath interval at ``precision_bits``."""
    return _mp_constant(name, iv_context(max(precision_bits, MIN_PRECISION_BITS)))


# ─── Enclosures ────────────────────────────────────────────────────────────────
@lru_cache(maxsize=64)
def const_enclosure(name: ConstantName, precision_bits: int = MIN_PRECISION_BITS) -> Interval:
    """Return a binary64 interval containing the named constant.

    R is SQRT2 shifted by -1 (exact in binary64) and R_SQUARED is ``3 - 2*SQRT2``
    evaluated outward, so the three stay consistent with each other.

    Endpoints are binary64, so bits above 53 only sharpen the mpmath evaluation
    before the outward rounding; the result is never thinner than the two floats
    around the constant.

    :param name: Which constant.
    :param precision_bits: mpmath working precision, at least 53.
    :returns: The enclosure; adjacent floats for PI, SQRT2 and SQRT3.
    """
    bits = max(precision_bits, MIN_PRECISION_BITS)
    if name is ConstantName.R:
        return const_enclosure(ConstantName.SQRT2, bits) - 1
    if name is ConstantName.R_SQUARED:
        return 3 - 2 * const_enclosure(ConstantName.SQRT2, bits)
    return interval_from_mp(_mp_constant(name, iv_context(bits + 8)))


PI = const_enclosure(ConstantName.PI)
SQRT2 = const_enclosure(ConstantName.SQRT2)
SQRT3 = const_enclosure(ConstantName.SQRT3)
R = const_enclosure(ConstantName.R)
R_SQUARED = const_enclosure(ConstantName.R_SQUARED)
HALF_PI = PI * 0.5
TWO_PI = PI * 2

# Nominal float values for coordinates of constructed packings.
RADIUS_SMALL = math.sqrt(2) - 1
