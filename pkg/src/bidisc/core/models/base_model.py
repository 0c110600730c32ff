# ♥♥─── Bidisc Base Models ──────────────────────────────────────────────────────
"""Common Pydantic configuration for bidisc documents and reports."""

from __future__ import annotations

from typing import Self
from importlib import metadata

from pydantic import BaseModel, ConfigDict

from bidisc.core.interval import Interval


# ─── Common Model Configuration ────────────────────────────────────────────────
BIDISC_MODEL_CONFIG = ConfigDict(extra="ignore", frozen=True, populate_by_name=True, validate_default=True, ser_json_inf_nan="strings")


def artifact_version() -> str:
    """Installed package version, or a local marker when running from a checkout."""
    try:
        return metadata.version("bidisc")
    except metadata.PackageNotFoundError:
        return "0.0.0+local"


# ─── Base Models ──────────────────────────────────────────────────────────────
class BidiscBaseModel(BaseModel):
    """Base Pydantic model with shared project configuration."""

    model_config = BIDISC_MODEL_CONFIG


class IntervalRecord(BidiscBaseModel):
    """Interval endpoints as decimal strings that read back to the same binary values."""

    lo: str
    hi: str

    @classmethod
    def from_interval(cls, value: Interval) -> Self:
        return cls(lo=repr(value.lo), hi=repr(value.hi))

    def to_interval(self) -> Interval:
        return Interval(float(self.lo), float(self.hi))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"
