# ♥♥─── Packing and Tiling Documents ────────────────────────────────────────────
from __future__ import annotations

from typing import Literal, Self

from pydantic import Field

from bidisc.core.packing import Disc, Packing
from bidisc.core.constructions import Tile, SquareTriangleTiling

from .base_enums import TileKind, RadiusClass
from .base_model import BidiscBaseModel


# ─── Packings ──────────────────────────────────────────────────────────────────
class DiscRecord(BidiscBaseModel):
    x: float
    y: float
    size: RadiusClass


class PackingDocument(BidiscBaseModel):
    """On-disk form of a packing: centres as shortest round-trip doubles."""

    radius_small: Literal["sqrt(2)-1"] = "sqrt(2)-1"
    discs: list[DiscRecord] = Field(default_factory=list)

    @classmethod
    def from_packing(cls, p: Packing) -> Self:
        return cls(discs=[DiscRecord(x=d.x, y=d.y, size=d.size) for d in p.discs])

    def to_packing(self) -> Packing:
        return Packing.from_discs(Disc(d.x, d.y, d.size) for d in self.discs)


# ─── Tilings ───────────────────────────────────────────────────────────────────
class TileRecord(BidiscBaseModel):
    kind: TileKind
    v: list[int] = Field(min_length=3, max_length=4)


class TilingDocument(BidiscBaseModel):
    vertices: list[tuple[float, float]] = Field(default_factory=list)
    tiles: list[TileRecord] = Field(default_factory=list)

    @classmethod
    def from_tiling(cls, t: SquareTriangleTiling) -> Self:
        return cls(vertices=list(t.vertices), tiles=[TileRecord(kind=tile.kind, v=list(tile.vertices)) for tile in t.tiles])

    def to_tiling(self) -> SquareTriangleTiling:
        return SquareTriangleTiling(vertices=tuple(self.vertices), tiles=tuple(Tile(r.kind, tuple(r.v)) for r in self.tiles))
