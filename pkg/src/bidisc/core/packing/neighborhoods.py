# ♥♥─── Neighbourhood Words ─────────────────────────────────────────────────────
from __future__ import annotations

from typing import Self
from dataclasses import dataclass

from bidisc.core.packing.packing import Packing
from bidisc.core.models.base_enums import Regime, RadiusClass
from bidisc.core.packing.fm_triangulation import FMTriangulation


LETTERS = frozenset("1r")


def minimal_rotation(letters: str) -> str:
    if not letters:
        return letters
    return min(letters[k:] + letters[:k] for k in range(len(letters)))


@dataclass(frozen=True, slots=True)
class NeighborhoodWord:
    """Cyclic clockwise word over {1, r}; compared up to rotation."""

    letters: str

    def __post_init__(self) -> None:
        if not set(self.letters) <= LETTERS:
            msg = f"neighbourhood words use the letters 1 and r, got {self.letters!r}"
            raise ValueError(msg)

    @property
    def canonical(self) -> str:
        return minimal_rotation(self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NeighborhoodWord):
            return NotImplemented
        return len(self.letters) == len(other.letters) and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.canonical

    @classmethod
    def from_sizes(cls, sizes: list[RadiusClass]) -> Self:
        return cls("".join(size.letter for size in sizes))

    def reversed(self) -> NeighborhoodWord:
        """The same fan read counter-clockwise."""
        return NeighborhoodWord(self.letters[::-1])

    def pair_counts(self) -> tuple[int, int, int]:
        """Numbers of consecutive neighbour pairs of kinds (1,1), (1,r) and (r,r) around the fan."""
        n11 = n1r = nrr = 0
        for k, letter in enumerate(self.letters):
            pair = {letter, self.letters[(k + 1) % len(self.letters)]}
            if pair == {"1"}:
                n11 += 1
            elif pair == {"r"}:
                nrr += 1
            else:
                n1r += 1
        return n11, n1r, nrr


def neighborhood_word(t: FMTriangulation, p: Packing, i: int) -> NeighborhoodWord:
    """Clockwise radius word of the FM-neighbours of disc ``i``.

    :raises BoundaryDisc: If ``i`` is not an interior vertex of ``t``.
    """
    return NeighborhoodWord.from_sizes([p[j].size for j in t.neighbors(i)])


# ─── Good Neighbourhoods ───────────────────────────────────────────────────────
GOOD_WORDS: dict[tuple[Regime, RadiusClass], frozenset[NeighborhoodWord]] = {
    (Regime.X_LE_HALF, RadiusClass.SMALL): frozenset({NeighborhoodWord("1111"), NeighborhoodWord("rrrrrr")}),
    (Regime.X_LE_HALF, RadiusClass.LARGE): frozenset({NeighborhoodWord("1r1r1r1r")}),
    (Regime.X_GE_HALF, RadiusClass.SMALL): frozenset({NeighborhoodWord("1111")}),
    (Regime.X_GE_HALF, RadiusClass.LARGE): frozenset(
        {NeighborhoodWord("1r1r1r1r"), NeighborhoodWord("1111r1r"), NeighborhoodWord("111r11r"), NeighborhoodWord("111111")}
    ),
}


def is_bad_neighborhood(w: NeighborhoodWord | str, disc_size: RadiusClass, regime: Regime) -> bool:
    word = NeighborhoodWord(w) if isinstance(w, str) else w
    return word not in GOOD_WORDS[regime, disc_size]
