from __future__ import annotations

from collections import Counter

import numpy as np
import pytest

from bidisc.core.errors import EmptyWindow, BoundaryDisc, TooFewDiscs, DegenerateInput, OverlappingDiscs
from bidisc.core.packing import (
    Disc,
    Packing,
    CensusResult,
    NeighborhoodWord,
    census_key,
    brute_force_fm,
    fm_triangulation,
    validate_packing,
    minimal_rotation,
    parse_census_key,
    neighborhood_word,
    is_bad_neighborhood,
    neighborhood_census,
)
from bidisc.core.models.base_enums import Regime, RadiusClass


L, S = RadiusClass.LARGE, RadiusClass.SMALL


def random_packing(rng: np.random.Generator, n: int, side: float = 7.0) -> Packing:
    """Rejection-sampled packing of n discs with a small gap between any two."""
    discs: list[Disc] = []
    while len(discs) < n:
        size = L if rng.random() < 0.5 else S
        x, y = rng.uniform(0, side, size=2)
        if all(np.hypot(x - d.x, y - d.y) > size.nominal + d.radius + 1e-3 for d in discs):
            discs.append(Disc(float(x), float(y), size))
    return Packing(tuple(discs))


# ─── Packings ──────────────────────────────────────────────────────────────────
def test_overlap_is_reported_with_the_pair():
    p = Packing((Disc(0, 0, L), Disc(1.5, 0, L), Disc(5, 5, S)))
    with pytest.raises(OverlappingDiscs) as error:
        validate_packing(p)
    assert error.value.pair == (0, 1)


def test_tangent_discs_are_disjoint():
    p = Packing((Disc(0, 0, L), Disc(2, 0, L), Disc(1, 1, S)))
    assert validate_packing(p) is p


def test_from_arrays():
    p = Packing.from_arrays(np.array([[0.0, 0.0], [3.0, 0.0]]), np.array([True, False]))
    assert p.discs == (Disc(0.0, 0.0, L), Disc(3.0, 0.0, S))
    assert p.large_count == p.small_count == 1


def test_window_keeps_original_indices(one_to_one):
    sub, indices = one_to_one.window(2.0)
    assert len(sub) == len(indices)
    assert all(sub[k] == one_to_one[int(i)] for k, i in enumerate(indices))
    assert np.all(np.abs(sub.centers) <= 2.0)


# ─── Triangulation ─────────────────────────────────────────────────────────────
def test_too_few_discs():
    with pytest.raises(TooFewDiscs):
        fm_triangulation(Packing((Disc(0, 0, L), Disc(3, 0, L))))


def test_coincident_centres():
    with pytest.raises(DegenerateInput):
        fm_triangulation(Packing((Disc(0, 0, S), Disc(0, 0, S), Disc(3, 0, L), Disc(0, 3, L))))


def test_three_discs_form_one_triangle():
    t = fm_triangulation(Packing((Disc(0, 0, L), Disc(3, 0, L), Disc(0, 3, S))))
    assert t.triangle_set() == {(0, 1, 2)}
    assert t.interior_vertices() == []
    with pytest.raises(BoundaryDisc):
        t.neighbors(0)


@pytest.mark.parametrize("seed", range(25))
def test_flips_match_brute_force(seed):
    rng = np.random.default_rng(seed)
    p = random_packing(rng, int(rng.integers(4, 13)))
    assert fm_triangulation(p).triangle_set() == brute_force_fm(p)


def test_stalled_flips_are_regrown():
    rng = np.random.default_rng(20)
    p = random_packing(rng, int(rng.integers(4, 13)))
    t = fm_triangulation(p)
    assert (4, 6, 10) in t.triangle_set()
    assert all(len(owners) <= 2 for owners in t.adjacency.values())


@pytest.mark.slow
def test_flips_match_brute_force_on_many_packings():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        p = random_packing(rng, int(rng.integers(3, 13)))
        assert fm_triangulation(p).triangle_set() == brute_force_fm(p)


def test_triangulated_window_is_a_disc(one_to_one):
    sub, _ = one_to_one.window(6.0)
    assert fm_triangulation(sub).euler_characteristic() == 2


def test_hexagonal_neighbours(hexagonal_large):
    sub, _ = hexagonal_large.window(6.0)
    t = fm_triangulation(sub)
    central = [i for i in t.interior_vertices() if np.all(np.abs(sub.centers[i]) <= 3.0)]
    assert central
    assert all(len(t.neighbors(i)) == 6 for i in central)


def test_one_to_one_words(one_to_one):
    sub, _ = one_to_one.window(6.0)
    t = fm_triangulation(sub)
    words = {(sub[i].size, neighborhood_word(t, sub, i)) for i in t.interior_vertices() if np.all(np.abs(sub.centers[i]) <= 4.0)}
    assert words == {(S, NeighborhoodWord("1111")), (L, NeighborhoodWord("1r1r1r1r"))}


# ─── Neighbourhood Words ───────────────────────────────────────────────────────
def test_words_compare_up_to_rotation():
    assert NeighborhoodWord("r1111r1") == NeighborhoodWord("1111r1r")
    assert NeighborhoodWord("11r") != NeighborhoodWord("11r1")
    assert minimal_rotation("r1r1") == "1r1r"
    assert str(NeighborhoodWord("r11")) == "11r"
    assert NeighborhoodWord("11rr1r").reversed() == NeighborhoodWord("r1rr11")


def test_word_letters_are_checked():
    with pytest.raises(ValueError, match="letters"):
        NeighborhoodWord("12r")


@pytest.mark.parametrize(
    ("word", "counts"),
    [("1r1r1r1r", (0, 8, 0)), ("1111r1r", (3, 4, 0)), ("111111", (6, 0, 0)), ("rrrrrr", (0, 0, 6))],
)
def test_pair_counts(word, counts):
    assert NeighborhoodWord(word).pair_counts() == counts


@pytest.mark.parametrize(
    ("word", "size", "regime", "bad"),
    [
        ("rrrrrr", S, Regime.X_LE_HALF, False),
        ("rrrrrr", S, Regime.X_GE_HALF, True),
        ("1111", S, Regime.X_GE_HALF, False),
        ("r1111r1", L, Regime.X_GE_HALF, False),
        ("111r11r", L, Regime.X_GE_HALF, False),
        ("111111", L, Regime.X_LE_HALF, True),
        ("1r1r1r1r", L, Regime.X_LE_HALF, False),
        ("11111", S, Regime.X_LE_HALF, True),
    ],
)
def test_bad_neighbourhoods(word, size, regime, bad):
    assert is_bad_neighborhood(word, size, regime) is bad


# ─── Census ────────────────────────────────────────────────────────────────────
def test_census_key_round_trip():
    key = census_key(L, NeighborhoodWord("r1r1r1r1"))
    assert key == "L:1r1r1r1r"
    assert parse_census_key(key) == (L, NeighborhoodWord("1r1r1r1r"))


def test_bad_counts_read_the_disc_class_from_the_key():
    result = CensusResult(window=10.0, counts=Counter({"L:111111": 3, "S:1111": 1, "S:rrrrrr": 4}))
    assert result.interior == 8
    assert result.bad_count(Regime.X_LE_HALF) == 3
    assert result.bad_count(Regime.X_GE_HALF) == 4
    assert result.bad_fractions == {Regime.X_LE_HALF: 3 / 8, Regime.X_GE_HALF: 0.5}


def test_census_of_the_one_to_one_packing(one_to_one):
    result = neighborhood_census(one_to_one, 6.0, margin=6.0)
    assert set(result.counts) == {"L:1r1r1r1r", "S:1111"}
    assert result.bad_fraction(Regime.X_LE_HALF) == 0
    assert result.bad_fraction(Regime.X_GE_HALF) == 0


def test_census_of_the_hexagonal_packing(hexagonal_large):
    result = neighborhood_census(hexagonal_large, 5.0, margin=6.0)
    assert set(result.counts) == {"L:111111"}
    assert result.bad_fraction(Regime.X_GE_HALF) == 0
    assert result.bad_fraction(Regime.X_LE_HALF) == 1


def test_tiled_census_agrees_with_a_single_tile(one_to_one):
    whole = neighborhood_census(one_to_one, 6.0, margin=6.0)
    tiled = neighborhood_census(one_to_one, 6.0, margin=6.0, tile_size=4.0)
    assert tiled.counts == whole.counts


def test_census_without_interior_discs():
    p = Packing((Disc(0, 0, L), Disc(2, 0, L), Disc(1, 1.8, L)))
    with pytest.raises(EmptyWindow):
        neighborhood_census(p, 3.0)
