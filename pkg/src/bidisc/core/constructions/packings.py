# ♥♥─── Dense Packings ───────────────────────────────────────────────────────────
"""Packings realising the maximal density over the whole stoichiometry range.

Below x = 1/2 the packing is a sequence of vertical columns read from the hat
expansion of a Sturmian word: letter 0 is a column of large discs 2 apart
(square-grid geometry, with a small disc nested between two consecutive large
columns), letter 1 a column of small discs 2r apart (hexagonal geometry).
Unlike columns meet 1 + r apart: over a column many times taller than 2, some
small disc always comes level with a large one, so no vertical phase allows a
closer joint. Each joint costs about 0.19 of area per unit height, and hat
blocks grow with their index, so the packing is centred far from position 0
where joints are sparse.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from bidisc.custom_logger import log
from bidisc.core.errors import OutOfRange
from bidisc.core.words import StandardWord, ExpandedWord
from bidisc.core.packing import Disc, Packing
from bidisc.core.interval import RADIUS_SMALL
from bidisc.core.models.base_enums import RadiusClass
from bidisc.core.constructions.tilings import exact, column_tiling, tiling_to_packing


L, S = RadiusClass.LARGE, RadiusClass.SMALL
SMALL_STEP = RADIUS_SMALL * math.sqrt(3.0)
JOINT = 1.0 + RADIUS_SMALL
COLUMN_DENOMINATOR = 10**6
CENTRE_OFFSET = 3


# ─── Single Phases ─────────────────────────────────────────────────────────────
def hexagonal_packing(size: RadiusClass, extent: int) -> Packing:
    """Triangular-lattice packing of equal discs filling the square [-2·extent, 2·extent]**2."""
    rho = size.nominal
    half = 2.0 * extent
    rows = int(half // (rho * math.sqrt(3.0)))
    discs = []
    for j in range(-rows, rows + 1):
        y = j * rho * math.sqrt(3.0)
        shift = rho * (j % 2)
        first = math.ceil((-half - shift) / (2 * rho))
        last = math.floor((half - shift) / (2 * rho))
        discs += [Disc(shift + 2 * rho * i, y, size) for i in range(first, last + 1)]
    return Packing(tuple(discs))


def square_grid_packing(extent: int) -> Packing:
    """The 1:1 packing: large discs on the grid 2Z**2, small discs at the square centres."""
    larges = [Disc(2.0 * i, 2.0 * j, L) for i in range(-extent, extent + 1) for j in range(-extent, extent + 1)]
    smalls = [Disc(2.0 * i + 1, 2.0 * j + 1, S) for i in range(-extent, extent) for j in range(-extent, extent)]
    return Packing(tuple(larges + smalls))


# ─── Column Packing ────────────────────────────────────────────────────────────
def small_column_frequency(x: float | Fraction) -> Fraction:
    """Frequency of small columns giving a proportion x of large discs.

    A large column carries one large and one nested small disc per height 2, a
    small column 1/r small discs; solving for the large-column share q gives
    q = (x/r)/(1 - 2x + x/r).

    :raises OutOfRange: Unless 0 < x < 1/2.
    """
    xf = float(exact(x))
    if not 0 < xf < 0.5:
        msg = f"column packings need 0 < x < 1/2, got {x}"
        raise OutOfRange(msg)
    share = (xf / RADIUS_SMALL) / (1 - 2 * xf + xf / RADIUS_SMALL)
    return Fraction(1 - share).limit_denominator(COLUMN_DENOMINATOR)


def _column_positions(letters: list[int]) -> list[float]:
    xs = [0.0]
    for previous, current in zip(letters, letters[1:], strict=False):
        if previous != current:
            gap = JOINT
        elif current == 0:
            gap = 2.0
        else:
            gap = SMALL_STEP
        xs.append(xs[-1] + gap)
    return xs


def column_packing(x: float | Fraction, extent: int) -> Packing:
    """Twinned packing for 0 < x < 1/2 over hat-word positions [c - extent, c + extent).

    Columns are as tall as the row of columns is wide, so the packing fills a
    square centred on the column at position c = CENTRE_OFFSET·extent.

    :raises OutOfRange: Unless 0 < x < 1/2.
    """
    beta = small_column_frequency(x)
    word = ExpandedWord(StandardWord(beta))
    centre = CENTRE_OFFSET * extent
    runs = word.runs(centre - extent, centre + extent)
    letters = [letter for start, stop, letter in runs for _ in range(stop - start)]
    xs = _column_positions(letters)
    shift = xs[extent]
    half = (xs[-1] - xs[0]) / 2
    discs: list[Disc] = []
    phase = 0.0
    for k, (letter, column_x) in enumerate(zip(letters, xs, strict=True)):
        cx = column_x - shift
        if letter == 0:
            discs += [Disc(cx, float(y), L) for y in np.arange(-2 * math.floor(half / 2), half + 1e-9, 2.0)]
            if k + 1 < len(letters) and letters[k + 1] == 0:
                discs += [Disc(cx + 1, float(y), S) for y in np.arange(1 - 2 * math.floor((half + 1) / 2), half + 1e-9, 2.0)]
            continue
        phase = RADIUS_SMALL - phase if k > 0 and letters[k - 1] == 1 else 0.0
        step = 2 * RADIUS_SMALL
        first = math.ceil((-half - phase) / step)
        discs += [Disc(cx, phase + step * j, S) for j in range(first, math.floor((half - phase) / step) + 1)]
    p = Packing(tuple(discs))
    log.debug("column packing x={} (small columns {}): {} discs over width {:.1f}", x, beta, len(p), 2 * half)
    return p


# ─── Dispatcher ────────────────────────────────────────────────────────────────
def construct(x: float | Fraction, extent: int) -> Packing:
    """A packing of maximal density for stoichiometry x.

    :param x: Proportion of large discs in [0, 1].
    :param extent: Size parameter of the underlying construction.
    :raises OutOfRange: Outside [0, 1].
    """
    xf = exact(x)
    if not 0 <= xf <= 1:
        msg = f"stoichiometry must lie in [0, 1], got {x}"
        raise OutOfRange(msg)
    if xf == 0:
        return hexagonal_packing(S, extent)
    if xf < Fraction(1, 2):
        return column_packing(xf, extent)
    if xf == Fraction(1, 2):
        return square_grid_packing(extent)
    return tiling_to_packing(column_tiling(xf, extent))
