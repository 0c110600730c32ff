# ♥♥─── Entropy Widgets ──────────────────────────────────────────────────────────
"""Count-level arithmetic behind the exponential number of densest patterns.

Two building blocks S_n and T_n mix squares and triangles in known amounts;
a proportion beta of S_n blocks tunes the square/triangle ratio of the tiling
to any target. Free dodecagons, each tileable in two ways with the same tiles,
contribute one independent binary choice apiece.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from dataclasses import dataclass

import mpmath

from bidisc.core.errors import OddN, NoSolution, OutOfRange


type Exact = Fraction | int


# ─── Blocks ────────────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class BlockCounts:
    """Squares and triangles in the blocks S_n and T_n."""

    n: int
    s_square: int
    s_triangle: int
    t_square: int
    t_triangle: int


def block_counts(n: int) -> BlockCounts:
    """Closed-form tile counts of the two blocks.

    :raises OddN: If n is negative or odd.
    """
    if n < 0 or n % 2:
        msg = f"block size must be a nonnegative even integer, got {n}"
        raise OddN(msg)
    return BlockCounts(n=n, s_square=n * n + 4 * n + 7, s_triangle=8 * n + 16, t_square=3 * n // 2 + 3, t_triangle=n * n + 2 * n + 6)


def square_triangle_ratio(beta: Exact | float, n: int) -> Fraction:
    """f(beta, n): squares over triangles when a share beta of the blocks are S_n."""
    b = Fraction(beta)
    c = block_counts(n)
    return (b * c.s_square + (1 - b) * c.t_square) / (b * c.s_triangle + (1 - b) * c.t_triangle)


def solve_beta(alpha: Exact | float, n: int) -> Fraction:
    """Share of S_n blocks giving the square/triangle ratio alpha/(1 - alpha).

    The equation f(beta, n) = rho is linear in beta:
    beta·(s□ - t□ - rho·(s△ - t△)) = rho·t△ - t□.

    :raises NoSolution: If the solution is not strictly inside (0, 1); a larger n may help.
    """
    a = Fraction(alpha)
    if not 0 < a < 1:
        msg = f"alpha must lie in (0, 1), got {alpha}"
        raise NoSolution(msg)
    ratio = a / (1 - a)
    c = block_counts(n)
    slope = c.s_square - c.t_square - ratio * (c.s_triangle - c.t_triangle)
    target = ratio * c.t_triangle - c.t_square
    if slope == 0:
        msg = f"f(beta, {n}) is constant; no beta reaches ratio {ratio}"
        raise NoSolution(msg)
    beta = target / slope
    if not 0 < beta < 1:
        msg = f"beta = {beta} is outside (0, 1) for n = {n}; increase n"
        raise NoSolution(msg)
    return beta


def smallest_block_size(alpha: Exact | float, limit: int = 10_000) -> int:
    """Smallest even n for which :func:`solve_beta` succeeds.

    :raises NoSolution: If none is found up to ``limit``.
    """
    for n in range(0, limit + 1, 2):
        try:
            solve_beta(alpha, n)
        except NoSolution:
            continue
        return n
    msg = f"no block size up to {limit} reaches alpha = {alpha}"
    raise NoSolution(msg)


# ─── Dodecagons ────────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class DodecagonTiling:
    """One of the two tilings of a regular dodecagon of edge 2."""

    rotation: float
    squares: int
    triangles: int

    def tile_area(self) -> mpmath.mpf:
        return self.squares * 4 + self.triangles * mpmath.sqrt(3)


def dodecagon_area(edge: int = 2) -> mpmath.mpf:
    """Area 12·edge**2 / (4·tan(pi/12)) of the regular dodecagon."""
    return 12 * mpmath.mpf(edge) ** 2 / (4 * mpmath.tan(mpmath.pi / 12))


@lru_cache(maxsize=1)
def dodecagon_tilings() -> tuple[DodecagonTiling, DodecagonTiling]:
    """The two tilings, which differ by a rotation of pi/6; both use 6 squares and 12 triangles."""
    return DodecagonTiling(0.0, 6, 12), DodecagonTiling(math.pi / 6, 6, 12)


def dodecagon_area_identity(dps: int = 50) -> bool:
    """Whether both tilings cover exactly the dodecagon area 24 + 12·sqrt(3)."""
    with mpmath.workdps(dps):
        area = dodecagon_area()
        tolerance = mpmath.mpf(10) ** (5 - dps)
        closed = 24 + 12 * mpmath.sqrt(3)
        return abs(area - closed) < tolerance and all(abs(t.tile_area() - area) < tolerance for t in dodecagon_tilings())


def dodecagon_pattern_bound(k: float, dodecagon_density: float) -> int:
    """log2 of a lower bound on the number of patterns in a disc of radius k.

    :param k: Pattern radius.
    :param dodecagon_density: Free dodecagons per unit area.
    :returns: floor(density·pi·k**2).
    :raises OutOfRange: For k <= 0 or a negative density.
    """
    if k <= 0 or dodecagon_density < 0:
        msg = f"need k > 0 and a nonnegative density, got k={k}, density={dodecagon_density}"
        raise OutOfRange(msg)
    return math.floor(dodecagon_density * math.pi * k * k)
