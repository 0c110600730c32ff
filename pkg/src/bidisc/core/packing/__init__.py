# ♥♥─── Packing Init ─────────────────────────────────────────────────────────────
from __future__ import annotations

from .census import CensusResult, census_key, parse_census_key, neighborhood_census
from .packing import Disc, Packing, validate_packing, overlapping_pairs
from .apollonius import SupportCircle, in_conflict, orientation, support_circle
from .neighborhoods import GOOD_WORDS, NeighborhoodWord, minimal_rotation, neighborhood_word, is_bad_neighborhood
from .fm_triangulation import FMTriangulation, brute_force_fm, fm_triangulation


__all__ = [
    "GOOD_WORDS",
    "CensusResult",
    "Disc",
    "FMTriangulation",
    "NeighborhoodWord",
    "Packing",
    "SupportCircle",
    "brute_force_fm",
    "census_key",
    "fm_triangulation",
    "in_conflict",
    "is_bad_neighborhood",
    "minimal_rotation",
    "neighborhood_census",
    "neighborhood_word",
    "orientation",
    "overlapping_pairs",
    "parse_census_key",
    "support_circle",
    "validate_packing",
]
