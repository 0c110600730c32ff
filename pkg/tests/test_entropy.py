from __future__ import annotations

from fractions import Fraction

import pytest
import mpmath

from bidisc.core.errors import OddN, NoSolution, OutOfRange
from bidisc.core.constructions import (
    solve_beta,
    block_counts,
    dodecagon_area,
    dodecagon_tilings,
    smallest_block_size,
    square_triangle_ratio,
    dodecagon_pattern_bound,
    dodecagon_area_identity,
)


@pytest.mark.parametrize(
    ("n", "counts"),
    [(0, (7, 16, 3, 6)), (2, (19, 32, 6, 14)), (4, (39, 48, 9, 30)), (8, (103, 80, 15, 86))],
)
def test_block_counts(n, counts):
    c = block_counts(n)
    assert (c.s_square, c.s_triangle, c.t_square, c.t_triangle) == counts


@pytest.mark.parametrize("n", [-2, 3])
def test_block_size_must_be_even(n):
    with pytest.raises(OddN):
        block_counts(n)


def test_ratio_at_the_pure_blocks():
    assert square_triangle_ratio(0, 4) == Fraction(3, 10)
    assert square_triangle_ratio(1, 4) == Fraction(13, 16)


def test_ratio_limits_in_n():
    assert square_triangle_ratio(0, 400) < Fraction(1, 100)
    assert square_triangle_ratio(1, 400) > 40


def test_beta_inverts_the_ratio():
    target = square_triangle_ratio(Fraction(1, 2), 4)
    alpha = target / (1 + target)
    assert solve_beta(alpha, 4) == Fraction(1, 2)


@pytest.mark.parametrize(("alpha", "n"), [(Fraction(1, 3), 8), (Fraction(1, 2), 8), (0.2, 6)])
def test_beta_round_trip(alpha, n):
    beta = solve_beta(alpha, n)
    a = Fraction(alpha)
    assert 0 < beta < 1
    assert abs(square_triangle_ratio(beta, n) - a / (1 - a)) <= Fraction(1, 10**12)


@pytest.mark.parametrize(("alpha", "n"), [(Fraction(9, 10), 4), (Fraction(1, 2), 4)])
def test_beta_needs_a_larger_block(alpha, n):
    with pytest.raises(NoSolution):
        solve_beta(alpha, n)


def test_smallest_block_size():
    n = smallest_block_size(Fraction(1, 2))
    assert n <= 8
    solve_beta(Fraction(1, 2), n)
    with pytest.raises(NoSolution):
        solve_beta(Fraction(1, 2), n - 2)


def test_dodecagon_tilings_share_their_tiles():
    first, second = dodecagon_tilings()
    assert (first.squares, first.triangles) == (second.squares, second.triangles) == (6, 12)
    assert first.rotation != second.rotation


def test_dodecagon_area_identity():
    assert dodecagon_area_identity()
    with mpmath.workdps(30):
        assert abs(dodecagon_area() - (24 + 12 * mpmath.sqrt(3))) < mpmath.mpf(10) ** -25


def test_pattern_bound():
    assert dodecagon_pattern_bound(10.0, 0.0) == 0
    small = dodecagon_pattern_bound(10.0, 0.05)
    large = dodecagon_pattern_bound(20.0, 0.05)
    assert abs(large - 4 * small) <= 4


def test_pattern_bound_arguments():
    with pytest.raises(OutOfRange):
        dodecagon_pattern_bound(0.0, 0.1)
    with pytest.raises(OutOfRange):
        dodecagon_pattern_bound(1.0, -0.1)
