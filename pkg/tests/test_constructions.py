from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from bidisc.core.words import IrrationalAlpha, StandardWord, render
from bidisc.core.errors import OutOfRange, InvalidTiling, BadNeighborhoodPresent
from bidisc.core.packing import Disc, Packing, validate_packing, neighborhood_census
from bidisc.core.geometry import delta_max
from bidisc.core.interval import PI, SQRT3
from bidisc.core.constructions import (
    Tile,
    SquareTriangleTiling,
    construct,
    column_alpha,
    column_tiling,
    column_packing,
    large_fraction,
    square_fraction,
    measured_density,
    hexagonal_packing,
    packing_to_tiling,
    tiling_to_packing,
    square_grid_packing,
)
from bidisc.core.models.base_enums import Regime, TileKind, RadiusClass


L, S = RadiusClass.LARGE, RadiusClass.SMALL
SQUARE = SquareTriangleTiling(((0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)), (Tile(TileKind.SQUARE, (0, 1, 2, 3)),))
TRIANGLE = SquareTriangleTiling(((0.0, 0.0), (2.0, 0.0), (1.0, math.sqrt(3.0))), (Tile(TileKind.TRIANGLE, (0, 1, 2)),))


def column_kinds(t: SquareTriangleTiling) -> str:
    """One letter per column from left to right: s for squares, t for triangles."""
    columns: dict[float, TileKind] = {}
    for tile in t.tiles:
        left = round(float(t.points[list(tile.vertices)][:, 0].min()), 6)
        columns[left] = tile.kind
    return "".join("s" if columns[x] is TileKind.SQUARE else "t" for x in sorted(columns))


# ─── Tilings ───────────────────────────────────────────────────────────────────
def test_all_triangles_at_one():
    t = column_tiling(1, 4)
    assert t.count(TileKind.SQUARE) == 0
    assert square_fraction(t) == 0
    t.validate()


def test_alternating_columns_at_two_thirds():
    t = column_tiling(Fraction(2, 3), 4)
    kinds = column_kinds(t)
    assert len(kinds) == 8
    assert kinds in {"st" * 4, "ts" * 4}


def test_silver_columns_follow_the_word():
    t = column_tiling(IrrationalAlpha.SQRT2_MINUS_1, 6)
    expected = render(StandardWord(IrrationalAlpha.SQRT2_MINUS_1), (-6, 6)).replace("1", "s").replace("0", "t")
    assert column_kinds(t) == expected


@pytest.mark.parametrize("x", [Fraction(3, 5), Fraction(2, 3), Fraction(3, 4), Fraction(9, 10)])
def test_square_share(x):
    alpha = float(column_alpha(x))
    t = column_tiling(x, 30)
    assert square_fraction(t) == pytest.approx(alpha / (alpha + 2 * (1 - alpha)), abs=0.03)


def test_tiling_outside_its_range():
    with pytest.raises(OutOfRange):
        column_tiling(0.4, 3)


def test_edge_lengths_are_checked():
    bent = SquareTriangleTiling(((0.0, 0.0), (2.0, 0.0), (2.0, 2.1), (0.0, 2.0)), SQUARE.tiles)
    with pytest.raises(InvalidTiling):
        bent.validate()


# ─── Tiling and Packing ────────────────────────────────────────────────────────
def test_single_square_packing():
    p = tiling_to_packing(SQUARE)
    assert p.large_count == 4
    assert p.small_count == 1
    validate_packing(p)
    small = next(d for d in p.discs if d.size is S)
    distances = [math.hypot(d.x - small.x, d.y - small.y) for d in p.discs if d.size is L]
    assert distances == pytest.approx([math.sqrt(2.0)] * 4, abs=1e-12)


def test_single_triangle_packing():
    p = tiling_to_packing(TRIANGLE)
    assert p.large_count == 3
    assert p.small_count == 0
    validate_packing(p)


def test_tiling_round_trip():
    t = column_tiling(Fraction(3, 4), 6)
    back = packing_to_tiling(tiling_to_packing(t))
    assert np.allclose(back.points, t.points, atol=1e-9)
    assert back.count(TileKind.SQUARE) == t.count(TileKind.SQUARE)
    assert {frozenset(tile.vertices) for tile in back.tiles} == {frozenset(tile.vertices) for tile in t.tiles}


def test_one_to_one_packing_gives_squares():
    t = packing_to_tiling(square_grid_packing(6))
    assert t.count(TileKind.TRIANGLE) == 0
    assert t.count(TileKind.SQUARE) == 12 * 12


def test_bad_small_disc_blocks_the_tiling():
    p = hexagonal_packing(S, 3)
    with pytest.raises(BadNeighborhoodPresent) as error:
        packing_to_tiling(p, margin=2.0)
    assert p[error.value.disc_index].size is S


# ─── Packings ──────────────────────────────────────────────────────────────────
@pytest.mark.parametrize("x", [Fraction(1, 5), Fraction(3, 10), Fraction(9, 20)])
def test_column_packing_is_disjoint(x):
    p = column_packing(x, 30)
    validate_packing(p)
    assert 0 < p.large_count < len(p)


def test_column_packing_outside_its_range():
    with pytest.raises(OutOfRange):
        column_packing(0.5, 10)


@pytest.mark.parametrize(("x", "kind"), [(0, "hexagonal"), (Fraction(1, 2), "grid"), (1, "tiling")])
def test_construct_dispatch(x, kind):
    p = construct(x, 5)
    validate_packing(p)
    match kind:
        case "hexagonal":
            assert p.large_count == 0
        case "grid":
            assert p.large_count == 11 * 11
            assert p.small_count == 10 * 10
        case "tiling":
            assert p.small_count == 0


def test_construct_outside_unit_interval():
    with pytest.raises(OutOfRange):
        construct(Fraction(3, 2), 5)


def test_large_fraction_of_a_tiling_packing():
    p = construct(Fraction(3, 4), 40)
    assert large_fraction(p, 30.0) == pytest.approx(0.75, abs=0.02)


@pytest.mark.slow
@pytest.mark.parametrize("x", [Fraction(3, 10), Fraction(1, 2), Fraction(3, 4)])
def test_stoichiometry_at_extent_two_hundred(x):
    p = construct(x, 200)
    validate_packing(p)
    assert p.large_count / len(p) == pytest.approx(float(x), abs=0.02)


# ─── Density ───────────────────────────────────────────────────────────────────
def test_empty_packing_density():
    assert measured_density(Packing(), 5.0).hi == 0


def test_window_must_be_positive():
    with pytest.raises(OutOfRange):
        measured_density(square_grid_packing(2), 0.0)


def test_single_disc_inside_the_window():
    value = measured_density(Packing((Disc(0.0, 0.0, L),)), 2.0)
    assert value.overlaps(PI / 16)


def test_half_disc_on_the_window_edge():
    value = measured_density(Packing((Disc(2.0, 0.0, L),)), 2.0)
    assert value.overlaps(PI / 32)


def test_hexagonal_density():
    p = hexagonal_packing(L, 30)
    assert measured_density(p, 50.0).mid == pytest.approx((PI / (2 * SQRT3)).mid, rel=5e-3)


def test_one_to_one_density():
    p = square_grid_packing(30)
    assert measured_density(p, 50.0).mid == pytest.approx(delta_max(0.5).mid, rel=5e-3)


def test_tiling_packing_density():
    p = construct(Fraction(3, 4), 40)
    fraction = large_fraction(p, 30.0)
    assert measured_density(p, 30.0).mid == pytest.approx(delta_max(fraction).mid, rel=1e-2)


@pytest.mark.slow
@pytest.mark.parametrize("x", [Fraction(3, 10), Fraction(1, 2), Fraction(3, 4)])
def test_constructions_reach_the_maximal_density(x):
    p = construct(x, 200)
    assert measured_density(p, 50.0).mid == pytest.approx(delta_max(float(x)).mid, rel=1e-2)


@pytest.mark.slow
def test_column_packing_is_centred_where_joints_are_sparse():
    p = column_packing(Fraction(3, 10), 100)
    assert measured_density(p, 50.0).mid == pytest.approx(delta_max(0.3).mid, rel=1e-2)


@pytest.mark.slow
def test_column_packing_census():
    p = construct(Fraction(3, 10), 200)
    near = neighborhood_census(p, 30.0, tile_size=40.0).bad_fraction(Regime.X_LE_HALF)
    far = neighborhood_census(p, 120.0, tile_size=40.0).bad_fraction(Regime.X_LE_HALF)
    assert near <= 0.15
    assert far <= 0.05
    assert far < near
