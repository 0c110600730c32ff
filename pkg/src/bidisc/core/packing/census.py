# ♥♥─── Neighbourhood Census ────────────────────────────────────────────────────
"""Counts of neighbourhood words over the interior discs of a square window."""

from __future__ import annotations

import math
from dataclasses import field, dataclass
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from bidisc.custom_logger import log
from bidisc.core.errors import EmptyWindow
from bidisc.core.packing.packing import Packing
from bidisc.core.models.base_enums import Regime, RadiusClass
from bidisc.core.packing.neighborhoods import NeighborhoodWord, neighborhood_word, is_bad_neighborhood
from bidisc.core.packing.fm_triangulation import fm_triangulation


DEFAULT_MARGIN = 8.0


def census_key(size: RadiusClass, word: NeighborhoodWord) -> str:
    return f"{size.value}:{word.canonical}"


def parse_census_key(key: str) -> tuple[RadiusClass, NeighborhoodWord]:
    size, letters = key.split(":", 1)
    return RadiusClass(size), NeighborhoodWord(letters)


@dataclass(frozen=True)
class CensusResult:
    window: float
    counts: Counter[str] = field(default_factory=Counter)

    @property
    def interior(self) -> int:
        return sum(self.counts.values())

    def bad_count(self, regime: Regime) -> int:
        total = 0
        for key, n in self.counts.items():
            size, word = parse_census_key(key)
            if is_bad_neighborhood(word, size, regime):
                total += n
        return total

    def bad_fraction(self, regime: Regime) -> float:
        return self.bad_count(regime) / self.interior

    @property
    def bad_fractions(self) -> dict[Regime, float]:
        return {regime: self.bad_fraction(regime) for regime in Regime}


# ─── Tiles ─────────────────────────────────────────────────────────────────────
def _tile_census(p: Packing, targets: list[int]) -> Counter[str]:
    """Words of the target discs (indices into ``p``) that are interior in the triangulation of ``p``."""
    counts: Counter[str] = Counter()
    if len(p) < 3 or not targets:
        return counts
    t = fm_triangulation(p)
    for i in targets:
        if t.is_interior(i):
            counts[census_key(p[i].size, neighborhood_word(t, p, i))] += 1
    return counts


def _tile_jobs(p: Packing, window: float, margin: float, tile_size: float | None) -> list[tuple[Packing, list[int]]]:
    inside = p.indices_in_square(window)
    if tile_size is None or tile_size >= 2 * window:
        local, original = p.window(window + margin)
        lookup = {int(j): k for k, j in enumerate(original)}
        return [(local, [lookup[int(i)] for i in inside])]
    per_side = math.ceil(2 * window / tile_size)
    step = 2 * window / per_side
    cell = np.minimum(((p.centers[inside] + window) // step).astype(int), per_side - 1)
    jobs = []
    for ix in range(per_side):
        for iy in range(per_side):
            members = inside[(cell[:, 0] == ix) & (cell[:, 1] == iy)]
            if members.size == 0:
                continue
            center = (-window + (ix + 0.5) * step, -window + (iy + 0.5) * step)
            local, original = p.window(step / 2 + margin, center)
            lookup = {int(j): k for k, j in enumerate(original)}
            jobs.append((local, [lookup[int(i)] for i in members]))
    return jobs


def neighborhood_census(
    p: Packing,
    window_radius: float,
    *,
    margin: float = DEFAULT_MARGIN,
    tile_size: float | None = None,
    workers: int = 1,
) -> CensusResult:
    """Count the neighbourhood words of interior discs with centres in [-w, w]**2.

    Each disc is classified inside a triangulation of its surroundings padded by
    ``margin``; boundary discs of that triangulation are skipped.

    :param p: The packing, extending beyond the window.
    :param window_radius: Half-width w of the window.
    :param margin: Padding of the triangulated region around each tile.
    :param tile_size: Split the window into square tiles of about this side; None for one tile.
    :param workers: Process count for tiles.
    :returns: The word counts keyed by disc size and canonical word.
    :raises EmptyWindow: If no interior disc lies in the window.
    """
    jobs = _tile_jobs(p, window_radius, margin, tile_size)
    counts: Counter[str] = Counter()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(_tile_census, *zip(*jobs, strict=True)):
                counts.update(partial)
    else:
        for local, targets in jobs:
            counts.update(_tile_census(local, targets))
    if not counts:
        msg = f"no interior disc inside the window of half-width {window_radius}"
        raise EmptyWindow(msg)
    result = CensusResult(window=window_radius, counts=counts)
    log.info("census over window {}: {} interior discs, {} distinct words", window_radius, result.interior, len(counts))
    return result
