# ♥♥─── Constructions Init ───────────────────────────────────────────────────────
from __future__ import annotations

from .entropy import (
    BlockCounts,
    DodecagonTiling,
    solve_beta,
    block_counts,
    dodecagon_area,
    dodecagon_tilings,
    smallest_block_size,
    square_triangle_ratio,
    dodecagon_pattern_bound,
    dodecagon_area_identity,
)
from .measure import clipped_area, quadrant_area, large_fraction, measured_density
from .tilings import Tile, SquareTriangleTiling, column_alpha, column_tiling, square_fraction, packing_to_tiling, tiling_from_word, tiling_to_packing
from .packings import construct, column_packing, hexagonal_packing, square_grid_packing, small_column_frequency


__all__ = [
    "BlockCounts",
    "DodecagonTiling",
    "SquareTriangleTiling",
    "Tile",
    "block_counts",
    "clipped_area",
    "column_alpha",
    "column_packing",
    "column_tiling",
    "construct",
    "dodecagon_area",
    "dodecagon_area_identity",
    "dodecagon_pattern_bound",
    "dodecagon_tilings",
    "hexagonal_packing",
    "large_fraction",
    "measured_density",
    "packing_to_tiling",
    "quadrant_area",
    "small_column_frequency",
    "smallest_block_size",
    "solve_beta",
    "square_fraction",
    "square_grid_packing",
    "square_triangle_ratio",
    "tiling_from_word",
    "tiling_to_packing",
]
