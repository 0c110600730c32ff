# ♥♥─── Bidisc ───────────────────────────────────────────────────────────────────
"""Density toolkit for packings by discs of radii 1 and sqrt(2) - 1."""

from __future__ import annotations

from bidisc.core.models.base_model import artifact_version


__version__ = artifact_version()
