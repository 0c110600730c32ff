# ♥♥─── Disc Packings ───────────────────────────────────────────────────────────
from __future__ import annotations

from typing import Self
from functools import cached_property
from dataclasses import field, dataclass
from collections.abc import Iterable, Sequence

import numpy as np
from numpy.typing import NDArray
from scipy.spatial import cKDTree

from bidisc.core.errors import OverlappingDiscs
from bidisc.core.models.base_enums import RadiusClass


# ─── Constants ─────────────────────────────────────────────────────────────────
OVERLAP_TOLERANCE = 1e-9
MAX_RADIUS = 1.0


# ─── Types ─────────────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class Disc:
    x: float
    y: float
    size: RadiusClass

    @property
    def radius(self) -> float:
        return self.size.nominal

    @property
    def center(self) -> tuple[float, float]:
        return self.x, self.y


@dataclass(frozen=True)
class Packing:
    """A finite set of interior-disjoint discs of the two radius classes."""

    discs: tuple[Disc, ...] = field(default_factory=tuple)

    @classmethod
    def from_arrays(cls, centers: NDArray[np.float64], large: NDArray[np.bool_]) -> Self:
        sizes = np.where(large, RadiusClass.LARGE, RadiusClass.SMALL)
        return cls(tuple(Disc(float(x), float(y), RadiusClass(s)) for (x, y), s in zip(centers, sizes, strict=True)))

    @classmethod
    def from_discs(cls, discs: Iterable[Disc]) -> Self:
        return cls(tuple(discs))

    def __len__(self) -> int:
        return len(self.discs)

    def __getitem__(self, index: int) -> Disc:
        return self.discs[index]

    @cached_property
    def centers(self) -> NDArray[np.float64]:
        if not self.discs:
            return np.zeros((0, 2))
        return np.array([disc.center for disc in self.discs], dtype=np.float64)

    @cached_property
    def is_large(self) -> NDArray[np.bool_]:
        return np.array([disc.size is RadiusClass.LARGE for disc in self.discs], dtype=bool)

    @cached_property
    def radii(self) -> NDArray[np.float64]:
        return np.array([disc.radius for disc in self.discs], dtype=np.float64)

    @cached_property
    def tree(self) -> cKDTree:
        return cKDTree(self.centers)

    @property
    def large_count(self) -> int:
        return int(self.is_large.sum())

    @property
    def small_count(self) -> int:
        return len(self) - self.large_count

    def indices_in_square(self, half_width: float, center: tuple[float, float] = (0.0, 0.0)) -> NDArray[np.intp]:
        """Indices of discs whose centre lies in the closed square of half-width ``half_width``."""
        if not self.discs:
            return np.zeros(0, dtype=np.intp)
        offset = np.abs(self.centers - np.asarray(center))
        return np.flatnonzero((offset[:, 0] <= half_width) & (offset[:, 1] <= half_width))

    def subset(self, indices: Sequence[int] | NDArray[np.intp]) -> Packing:
        return Packing(tuple(self.discs[int(i)] for i in indices))

    def window(self, half_width: float, center: tuple[float, float] = (0.0, 0.0)) -> tuple[Packing, NDArray[np.intp]]:
        """Sub-packing inside a square window, plus the original indices of its discs."""
        indices = self.indices_in_square(half_width, center)
        return self.subset(indices), indices


# ─── Validation ────────────────────────────────────────────────────────────────
def overlapping_pairs(p: Packing, tol: float = OVERLAP_TOLERANCE) -> list[tuple[int, int]]:
    """Pairs whose centre distance is below the radius sum by more than ``tol``."""
    if len(p) < 2:
        return []
    pairs = np.array(sorted(p.tree.query_pairs(r=2 * MAX_RADIUS + tol)), dtype=np.intp).reshape(-1, 2)
    if pairs.size == 0:
        return []
    distance = np.linalg.norm(p.centers[pairs[:, 0]] - p.centers[pairs[:, 1]], axis=1)
    required = p.radii[pairs[:, 0]] + p.radii[pairs[:, 1]] - tol
    bad = pairs[distance < required]
    return [(int(i), int(j)) for i, j in bad]


def validate_packing(p: Packing, tol: float = OVERLAP_TOLERANCE) -> Packing:
    """Check interior-disjointness.

    :param p: The packing.
    :param tol: Allowed penetration.
    :returns: The same packing.
    :raises OverlappingDiscs: Naming the first offending pair.
    """
    bad = overlapping_pairs(p, tol)
    if bad:
        i, j = bad[0]
        msg = f"discs {i} and {j} overlap ({len(bad)} overlapping pairs)"
        raise OverlappingDiscs(msg, pair=(i, j))
    return p
