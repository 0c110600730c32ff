# ♥♥─── Sturmian Words ──────────────────────────────────────────────────────────
"""The mechanical words u(alpha) and their hat expansion.

u_k = floor((k + 1)·alpha) - floor(k·alpha), which is 0 exactly when
k·alpha mod 1 lies in [0, 1 - alpha). The hat expansion repeats the letter of
source index k |k| + 1 times; block k >= 0 starts at position k(k+1)/2 and the
blocks of negative indices are laid out leftwards from position -1.
"""

from __future__ import annotations

import math
from enum import StrEnum
from fractions import Fraction
from functools import lru_cache
from dataclasses import dataclass
from collections.abc import Callable, Iterator

import mpmath

from bidisc.core.errors import EmptyWindow, UndecidableLetter
from bidisc.core.interval import R, Interval
from bidisc.core.interval.constants import ConstantName, mp_bounds, mp_constant


type Letter = int
type WordAccessor = Callable[[int], Letter]

# Precisions tried, in order, when an irrational floor is not decided in binary64.
_ESCALATION_BITS = (128, 256, 1024)


class IrrationalAlpha(StrEnum):
    """Irrational slopes handled symbolically."""

    SQRT2_MINUS_1 = "sqrt(2)-1"


_IRRATIONAL_ENCLOSURES: dict[IrrationalAlpha, tuple[Interval, ConstantName]] = {IrrationalAlpha.SQRT2_MINUS_1: (R, ConstantName.R)}


# ─── Floors ────────────────────────────────────────────────────────────────────
@lru_cache(maxsize=65536)
def _irrational_floor(alpha: IrrationalAlpha, k: int) -> int:
    """floor(k·alpha), decided with intervals and escalated through mpmath."""
    if k == 0:
        return 0
    enclosure, name = _IRRATIONAL_ENCLOSURES[alpha]
    product = Interval.point(k) * enclosure
    lo, hi = math.floor(product.lo), math.floor(product.hi)
    if lo == hi:
        return lo
    for bits in _ESCALATION_BITS:
        value = mp_constant(name, bits + k.bit_length()) * k
        lo_mp, hi_mp = mp_bounds(value)
        lo, hi = int(mpmath.floor(lo_mp)), int(mpmath.floor(hi_mp))
        if lo == hi:
            return lo
    msg = f"floor({k}·{alpha}) could not be decided"
    raise UndecidableLetter(msg)


# ─── Standard Word ─────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class StandardWord:
    """u(alpha) for an exact rational alpha or a tagged irrational one, 0 <= alpha < 1."""

    alpha: Fraction | IrrationalAlpha

    def __post_init__(self) -> None:
        if isinstance(self.alpha, Fraction) and not 0 <= self.alpha < 1:
            msg = f"alpha must lie in [0, 1), got {self.alpha}"
            raise ValueError(msg)

    def floor_multiple(self, k: int) -> int:
        if isinstance(self.alpha, Fraction):
            return math.floor(k * self.alpha)
        return _irrational_floor(self.alpha, k)

    def letter(self, index: int) -> Letter:
        return self.floor_multiple(index + 1) - self.floor_multiple(index)

    def ones_in(self, start: int, stop: int) -> int:
        """Number of letters 1 at indices [start, stop)."""
        return self.floor_multiple(stop) - self.floor_multiple(start)


def sturmian_letter(word: StandardWord, k: int) -> Letter:
    """Letter u_k of u(alpha): 0 iff k·alpha mod 1 lies in [0, 1 - alpha)."""
    return word.letter(k)


# ─── Expanded Word ─────────────────────────────────────────────────────────────
def _negative_cover(m: int) -> int:
    """Positions covered by blocks -1..-m: sum of (j + 1) for j = 1..m."""
    return m * (m + 3) // 2


@dataclass(frozen=True, slots=True)
class ExpandedWord:
    """The hat expansion of a standard word."""

    base: StandardWord

    @staticmethod
    def block_of(position: int) -> int:
        """Source index whose block contains ``position``."""
        if position >= 0:
            k = (math.isqrt(8 * position + 1) - 1) // 2
            while k * (k + 1) // 2 > position:
                k -= 1
            while (k + 1) * (k + 2) // 2 <= position:
                k += 1
            return k
        depth = -position
        m = max(1, (math.isqrt(9 + 8 * depth) - 3) // 2)
        while _negative_cover(m) < depth:
            m += 1
        while m > 1 and _negative_cover(m - 1) >= depth:
            m -= 1
        return -m

    @staticmethod
    def block_span(k: int) -> tuple[int, int]:
        """Half-open position range [start, stop) of block ``k``."""
        if k >= 0:
            return k * (k + 1) // 2, (k + 1) * (k + 2) // 2
        m = -k
        return -_negative_cover(m), -_negative_cover(m - 1)

    def letter(self, position: int) -> Letter:
        return self.base.letter(self.block_of(position))

    def runs(self, start: int, stop: int) -> Iterator[tuple[int, int, Letter]]:
        """Yield (run_start, run_stop, letter) block pieces covering [start, stop)."""
        position = start
        while position < stop:
            k = self.block_of(position)
            _, block_stop = self.block_span(k)
            piece_stop = min(block_stop, stop)
            yield position, piece_stop, self.base.letter(k)
            position = piece_stop


def hat_letter(word: ExpandedWord, p: int) -> Letter:
    """Letter at position ``p`` of the hat expansion; position 0 starts block k = 0."""
    return word.letter(p)


# ─── Frequencies ───────────────────────────────────────────────────────────────
def _window(window: tuple[int, int] | range) -> tuple[int, int]:
    start, stop = (window.start, window.stop) if isinstance(window, range) else window
    if stop <= start:
        msg = f"window [{start}, {stop}) is empty"
        raise EmptyWindow(msg)
    return start, stop


def count_zeros(source: StandardWord | ExpandedWord | WordAccessor, window: tuple[int, int] | range) -> int:
    start, stop = _window(window)
    if isinstance(source, StandardWord):
        return (stop - start) - source.ones_in(start, stop)
    if isinstance(source, ExpandedWord):
        return sum(run_stop - run_start for run_start, run_stop, letter in source.runs(start, stop) if letter == 0)
    return sum(1 for p in range(start, stop) if source(p) == 0)


def letter_frequency(source: StandardWord | ExpandedWord | WordAccessor, window: tuple[int, int] | range) -> Fraction:
    """Exact proportion of letter 0 in the window.

    :param source: A word, or any callable mapping a position to a letter.
    :param window: Half-open position range [start, stop).
    :raises EmptyWindow: If the window has no positions.
    """
    start, stop = _window(window)
    return Fraction(count_zeros(source, window), stop - start)


def transition_count(source: StandardWord | ExpandedWord | WordAccessor, window: tuple[int, int] | range) -> int:
    """Number of positions p in the window with letter(p) != letter(p + 1)."""
    start, stop = _window(window)
    if isinstance(source, ExpandedWord):
        transitions = 0
        previous: Letter | None = None
        for _, _, letter in source.runs(start, stop + 1):
            if previous is not None and letter != previous:
                transitions += 1
            previous = letter
        return transitions
    letter_at = source.letter if isinstance(source, StandardWord) else source
    return sum(1 for p in range(start, stop) if letter_at(p) != letter_at(p + 1))


def render(source: StandardWord | ExpandedWord | WordAccessor, window: tuple[int, int] | range) -> str:
    """The letters of a window as a string of digits."""
    start, stop = _window(window)
    letter_at = source.letter if isinstance(source, (StandardWord, ExpandedWord)) else source
    return "".join(str(letter_at(p)) for p in range(start, stop))
