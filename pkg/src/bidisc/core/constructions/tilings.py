# ♥♥─── Square-Triangle Tilings ─────────────────────────────────────────────────
"""Column tilings for x >= 1/2 and the tiling <-> packing correspondence.

Tiles have edge length 2 so that a large disc on every vertex and a small disc
at every square centre are tangent (half-diagonal sqrt(2) = 1 + r).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property
from dataclasses import dataclass
from collections import defaultdict

import numpy as np
from numpy.typing import NDArray

from bidisc.custom_logger import log
from bidisc.core.errors import OutOfRange, InvalidTiling, BadNeighborhoodPresent
from bidisc.core.words import StandardWord, IrrationalAlpha
from bidisc.core.packing import Disc, Packing, FMTriangulation, fm_triangulation, neighborhood_word, is_bad_neighborhood
from bidisc.core.models.base_enums import Regime, TileKind, RadiusClass


EDGE = 2.0
EDGE_TOLERANCE = 1e-9
ROW_HEIGHT = math.sqrt(3.0)
HALF_DIAGONAL = math.sqrt(2.0)

# Bound on the denominator used when a float stoichiometry is made exact.
MAX_DENOMINATOR = 10**9
BOUNDARY_MARGIN = 4.0


def exact(value: float | Fraction) -> Fraction:
    """Nearest fraction with a bounded denominator; Fractions pass through."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value).limit_denominator(MAX_DENOMINATOR)


# ─── Types ─────────────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class Tile:
    kind: TileKind
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class SquareTriangleTiling:
    """Vertices in the plane plus counter-clockwise square and triangle tiles."""

    vertices: tuple[tuple[float, float], ...]
    tiles: tuple[Tile, ...]

    @cached_property
    def points(self) -> NDArray[np.float64]:
        if not self.vertices:
            return np.zeros((0, 2))
        return np.array(self.vertices, dtype=np.float64)

    def edges(self) -> set[tuple[int, int]]:
        found = set()
        for tile in self.tiles:
            ring = tile.vertices
            for k, a in enumerate(ring):
                b = ring[(k + 1) % len(ring)]
                found.add((min(a, b), max(a, b)))
        return found

    def count(self, kind: TileKind) -> int:
        return sum(1 for tile in self.tiles if tile.kind is kind)

    @property
    def squares(self) -> list[Tile]:
        return [tile for tile in self.tiles if tile.kind is TileKind.SQUARE]

    def centroid(self, tile: Tile) -> tuple[float, float]:
        x, y = self.points[list(tile.vertices)].mean(axis=0)
        return float(x), float(y)

    def validate(self, tol: float = EDGE_TOLERANCE) -> SquareTriangleTiling:
        """Check that every tile edge has length 2 and every tile has the right arity.

        :raises InvalidTiling: On the first offending edge or tile.
        """
        for tile in self.tiles:
            expected = 4 if tile.kind is TileKind.SQUARE else 3
            if len(tile.vertices) != expected:
                msg = f"{tile.kind} tile with {len(tile.vertices)} vertices"
                raise InvalidTiling(msg)
        for a, b in sorted(self.edges()):
            length = float(np.hypot(*(self.points[a] - self.points[b])))
            if abs(length - EDGE) > tol:
                msg = f"edge ({a}, {b}) has length {length:.12f}, expected {EDGE}"
                raise InvalidTiling(msg)
        return self


def square_fraction(t: SquareTriangleTiling) -> float:
    """Proportion of squares among all tiles."""
    if not t.tiles:
        return 0.0
    return t.count(TileKind.SQUARE) / len(t.tiles)


# ─── Column Tilings ────────────────────────────────────────────────────────────
def tiling_from_word(word: StandardWord, extent: int, rows: int | None = None) -> SquareTriangleTiling:
    """Columns k in [-extent, extent): squares on letter 1, triangles on letter 0.

    Every vertical boundary line carries vertices 2 apart. A square column keeps
    the vertical phase of its left boundary; a triangle column (width sqrt(3))
    shifts it by 1.

    :param word: The column word.
    :param extent: Number of columns on each side of 0.
    :param rows: Vertex rows on each side of y = 0 per boundary line (defaults to ``extent``).
    """
    rows = extent if rows is None else rows
    columns = [word.letter(k) for k in range(-extent, extent)]
    per_line = 2 * rows + 1
    xs = [0.0]
    phases = [0]
    for letter in columns:
        xs.append(xs[-1] + (EDGE if letter == 1 else ROW_HEIGHT))
        phases.append(phases[-1] if letter == 1 else 1 - phases[-1])
    shift = xs[extent]
    vertices = [(x - shift, float(phase + 2 * j)) for x, phase in zip(xs, phases, strict=True) for j in range(-rows, rows + 1)]

    def vid(line: int, j: int) -> int | None:
        return line * per_line + j + rows if -rows <= j <= rows else None

    tiles: list[Tile] = []
    for line, letter in enumerate(columns):
        for j in range(-rows - 1, rows + 1):
            left, left_up = vid(line, j), vid(line, j + 1)
            if letter == 1:
                right, right_up = vid(line + 1, j), vid(line + 1, j + 1)
                if right is not None and right_up is not None and left is not None and left_up is not None:
                    tiles.append(Tile(TileKind.SQUARE, (left, right, right_up, left_up)))
                continue
            # Right boundary vertex at left height + 1.
            offset = (phases[line] + 1 - phases[line + 1]) // 2
            right, right_up = vid(line + 1, j + offset), vid(line + 1, j + offset + 1)
            if left is not None and left_up is not None and right is not None:
                tiles.append(Tile(TileKind.TRIANGLE, (left, right, left_up)))
            if right is not None and right_up is not None and left_up is not None:
                tiles.append(Tile(TileKind.TRIANGLE, (right, right_up, left_up)))
    return SquareTriangleTiling(tuple(vertices), tuple(tiles))


def column_alpha(x: float | Fraction) -> Fraction:
    """alpha = (1 - x)/x for 1/2 < x <= 1.

    :raises OutOfRange: Outside (1/2, 1].
    """
    xf = exact(x)
    if not Fraction(1, 2) < xf <= 1:
        msg = f"column tilings need 1/2 < x <= 1, got {x}"
        raise OutOfRange(msg)
    return (1 - xf) / xf


def column_tiling(x: float | Fraction | IrrationalAlpha, extent: int) -> SquareTriangleTiling:
    """Tiling whose column k is made of squares iff u_k((1 - x)/x) = 1.

    An :class:`IrrationalAlpha` is taken as the slope itself.

    :raises OutOfRange: Outside (1/2, 1].
    """
    alpha = x if isinstance(x, IrrationalAlpha) else column_alpha(x)
    t = tiling_from_word(StandardWord(alpha), extent)
    log.debug("column tiling for alpha={}: {} squares, {} triangles", alpha, t.count(TileKind.SQUARE), t.count(TileKind.TRIANGLE))
    return t


# ─── Correspondence ────────────────────────────────────────────────────────────
def tiling_to_packing(t: SquareTriangleTiling) -> Packing:
    """Large disc on each vertex, small disc at each square centre.

    :raises InvalidTiling: If an edge length differs from 2.
    """
    t.validate()
    discs = [Disc(x, y, RadiusClass.LARGE) for x, y in t.vertices]
    discs += [Disc(*t.centroid(tile), RadiusClass.SMALL) for tile in t.squares]
    return Packing(tuple(discs))


def _ccw(points: NDArray[np.float64], ring: list[int]) -> tuple[int, ...]:
    center = points[ring].mean(axis=0)
    angles = [math.atan2(points[v][1] - center[1], points[v][0] - center[0]) for v in ring]
    return tuple(v for _, v in sorted(zip(angles, ring, strict=True)))


def _bad_disc(p: Packing, t: FMTriangulation, margin: float) -> int | None:
    """First interior disc at least ``margin`` inside the bounding box whose neighbourhood is bad."""
    lo, hi = p.centers.min(axis=0) + margin, p.centers.max(axis=0) - margin
    deep = set(np.flatnonzero(np.all((p.centers >= lo) & (p.centers <= hi), axis=1)).tolist())
    for i in t.interior_vertices():
        if i not in deep:
            continue
        if is_bad_neighborhood(neighborhood_word(t, p, i), p[i].size, Regime.X_GE_HALF):
            return i
    return None


def packing_to_tiling(
    p: Packing, triangulation: FMTriangulation | None = None, tol: float = 1e-6, margin: float = BOUNDARY_MARGIN
) -> SquareTriangleTiling:
    """Recover the square-triangle tiling behind an x >= 1/2 packing.

    Vertices are the large-disc centres; tiles are triples of mutually tangent
    large discs and, for each small disc, the four large discs tangent to it.

    :param p: The packing.
    :param triangulation: Its FM-triangulation, computed when omitted.
    :param tol: Tolerance on tangency distances.
    :param margin: Discs closer than this to the bounding box are not checked.
    :raises BadNeighborhoodPresent: If an interior disc has a neighbourhood outside the x >= 1/2 good set.
    """
    t = fm_triangulation(p) if triangulation is None else triangulation
    if (bad := _bad_disc(p, t, margin)) is not None:
        msg = f"disc {bad} has neighbourhood {neighborhood_word(t, p, bad)}"
        raise BadNeighborhoodPresent(msg, disc_index=bad)
    large = np.flatnonzero(p.is_large)
    small = np.flatnonzero(~p.is_large)
    renumber = {int(i): k for k, i in enumerate(large)}
    points = p.centers[large]

    adjacent: dict[int, set[int]] = defaultdict(set)
    for i, j in p.tree.query_pairs(EDGE + tol):
        if p.is_large[i] and p.is_large[j] and abs(float(np.hypot(*(p.centers[i] - p.centers[j]))) - EDGE) <= tol:
            a, b = renumber[i], renumber[j]
            adjacent[a].add(b)
            adjacent[b].add(a)
    tiles: list[Tile] = []
    for a in sorted(adjacent):
        for b in sorted(v for v in adjacent[a] if v > a):
            for c in sorted(v for v in adjacent[a] & adjacent[b] if v > b):
                tiles.append(Tile(TileKind.TRIANGLE, _ccw(points, [a, b, c])))
    for s in small:
        around = [renumber[int(j)] for j in p.tree.query_ball_point(p.centers[s], HALF_DIAGONAL + tol) if p.is_large[j]]
        if len(around) == 4:
            tiles.append(Tile(TileKind.SQUARE, _ccw(points, around)))
    vertices = tuple((float(x), float(y)) for x, y in points)
    return SquareTriangleTiling(vertices, tuple(tiles))
