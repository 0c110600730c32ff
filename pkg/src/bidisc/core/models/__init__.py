# ♥♥─── Bidisc Models Initialization ───────────────────────────────────────────
"""Enums and the base model; documents and reports live in their own modules."""

from __future__ import annotations

from .base_enums import Regime, Command, PlotKind, TileKind, PairClass, RadiusClass, VertexLabel, OutputFormat, TightTriangleKind, VerificationStatus
from .base_model import IntervalRecord, BidiscBaseModel, artifact_version


__all__ = [
    "BidiscBaseModel",
    "Command",
    "IntervalRecord",
    "OutputFormat",
    "PairClass",
    "PlotKind",
    "RadiusClass",
    "Regime",
    "TightTriangleKind",
    "TileKind",
    "VerificationStatus",
    "VertexLabel",
    "artifact_version",
]
