from __future__ import annotations

import math
from fractions import Fraction

import pytest

from bidisc.core.words import StandardWord, ExpandedWord, IrrationalAlpha, render, hat_letter, count_zeros, sturmian_letter, letter_frequency, transition_count
from bidisc.core.errors import EmptyWindow


THIRD = StandardWord(Fraction(1, 3))
SILVER = StandardWord(IrrationalAlpha.SQRT2_MINUS_1)


def floor_letter(alpha: Fraction, k: int) -> int:
    return math.floor((k + 1) * alpha) - math.floor(k * alpha)


@pytest.mark.parametrize(("k", "letter"), [(0, 0), (1, 0), (2, 1), (3, 0), (5, 1)])
def test_third_letters(k, letter):
    assert sturmian_letter(THIRD, k) == letter


def test_third_is_periodic_over_negative_indices():
    assert render(THIRD, (-21, 21)) == "001" * 14


@pytest.mark.parametrize(("k", "letter"), [(0, 0), (1, 0), (2, 1), (3, 0), (4, 1)])
def test_silver_letters(k, letter):
    assert sturmian_letter(SILVER, k) == letter


def test_silver_matches_a_close_rational_on_a_window():
    close = Fraction(5741, 13860)
    assert render(SILVER, (-20, 21)) == "".join(str(floor_letter(close, k)) for k in range(-20, 21))


def test_all_zero_word():
    assert render(StandardWord(Fraction(0)), (-5, 5)) == "0" * 10


def test_alpha_outside_unit_interval():
    with pytest.raises(ValueError, match="alpha"):
        StandardWord(Fraction(1))


def test_hat_expansion_prefix():
    hat = ExpandedWord(THIRD)
    assert render(hat, (0, 6)) == "000111"
    assert "".join(str(hat_letter(hat, p)) for p in range(3, 15)) == "111" + "0" * 9


@pytest.mark.parametrize("k", [-7, -3, -1, 0, 1, 4, 9])
def test_blocks_have_length_abs_k_plus_one(k):
    start, stop = ExpandedWord.block_span(k)
    assert stop - start == abs(k) + 1
    assert all(ExpandedWord.block_of(p) == k for p in range(start, stop))


def test_blocks_tile_the_line():
    spans = sorted(ExpandedWord.block_span(k) for k in range(-30, 30))
    assert all(left[1] == right[0] for left, right in zip(spans, spans[1:], strict=False))
    assert ExpandedWord.block_span(0) == (0, 1)
    assert ExpandedWord.block_span(-1) == (-2, 0)


def test_hat_counts_agree_with_letters():
    hat = ExpandedWord(SILVER)
    window = (-200, 300)
    assert count_zeros(hat, window) == sum(1 for p in range(*window) if hat.letter(p) == 0)
    assert transition_count(hat, window) == sum(1 for p in range(*window) if hat.letter(p) != hat.letter(p + 1))


def test_standard_word_frequency_is_exact():
    assert letter_frequency(THIRD, (0, 300)) == Fraction(2, 3)


def test_hat_frequency_tends_to_one_minus_alpha():
    hat = ExpandedWord(THIRD)
    assert abs(float(letter_frequency(hat, (-50_000, 50_000))) - 2 / 3) < 0.01


def test_hat_transitions_are_sparse():
    hat = ExpandedWord(SILVER)
    transitions = transition_count(hat, (0, 5000))
    assert 0 < transitions < 5000 / 10


def test_callable_source():
    assert letter_frequency(lambda p: p % 2, range(10)) == Fraction(1, 2)


def test_empty_window():
    with pytest.raises(EmptyWindow):
        letter_frequency(THIRD, (4, 4))
