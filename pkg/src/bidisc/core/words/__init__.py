# ♥♥─── Words Init ───────────────────────────────────────────────────────────────
from __future__ import annotations

from .sturmian import Letter, StandardWord, ExpandedWord, WordAccessor, IrrationalAlpha, render, hat_letter, count_zeros, sturmian_letter, letter_frequency, transition_count


__all__ = [
    "ExpandedWord",
    "IrrationalAlpha",
    "Letter",
    "StandardWord",
    "WordAccessor",
    "count_zeros",
    "hat_letter",
    "letter_frequency",
    "render",
    "sturmian_letter",
    "transition_count",
]
