# ♥♥─── Error Hierarchy ──────────────────────────────────────────────────────────
"""Exceptions raised by the bidisc kernels, grouped by the module that raises them."""

from __future__ import annotations

from typing import Any


class BidiscError(Exception):
    """Base class for every error raised by bidisc."""


# ─── Interval Arithmetic ───────────────────────────────────────────────────────
class IntervalError(BidiscError):
    """Invalid interval operation."""


class EmptyInterval(IntervalError):
    """An interval with lo > hi was requested, or an intersection is empty."""


class DivisionByIntervalContainingZero(IntervalError):
    pass


class NegativeOperand(IntervalError):
    pass


class OperandOutsideMinusOneOne(IntervalError):
    pass


# ─── Words ─────────────────────────────────────────────────────────────────────
class WordError(BidiscError):
    pass


class EmptyWindow(WordError):
    pass


class UndecidableLetter(WordError):
    """The fractional part of k·alpha could not be separated from 1 - alpha."""


# ─── Geometry ──────────────────────────────────────────────────────────────────
class GeometryError(BidiscError):
    pass


class OutOfRange(GeometryError):
    pass


class DegenerateBox(GeometryError):
    """The triangle inequality fails everywhere on a side-length box."""


class SectorCrossesOppositeSide(GeometryError):
    pass


# ─── Packings ──────────────────────────────────────────────────────────────────
class PackingError(BidiscError):
    pass


class TooFewDiscs(PackingError):
    pass


class DegenerateInput(PackingError):
    pass


class BoundaryDisc(PackingError):
    pass


class OverlappingDiscs(PackingError):
    def __init__(self, message: str, pair: tuple[int, int] | None = None) -> None:
        super().__init__(message)
        self.pair = pair


# ─── Constructions ─────────────────────────────────────────────────────────────
class ConstructionError(BidiscError):
    pass


class InvalidTiling(ConstructionError):
    pass


class BadNeighborhoodPresent(ConstructionError):
    def __init__(self, message: str, disc_index: int) -> None:
        super().__init__(message)
        self.disc_index = disc_index


class OddN(ConstructionError):
    pass


class NoSolution(ConstructionError):
    pass


# ─── Certifier ─────────────────────────────────────────────────────────────────
class CertifierError(BidiscError):
    pass


class StraddlesHalf(CertifierError):
    pass


class UncalibratedScheme(CertifierError):
    pass


class UnknownPairClass(CertifierError):
    pass


class NonpositiveEta(CertifierError):
    pass


class CalibrationFailed(CertifierError):
    """No candidate (m, Z) pair satisfies the vertex inequality.

    :param message: Human readable reason.
    :param blocking: The neighbourhood (disc class and triangle-label counts) that blocked the last candidate.
    """

    def __init__(self, message: str, blocking: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.blocking = blocking or {}


# ─── Files ─────────────────────────────────────────────────────────────────────
class DocumentError(BidiscError):
    """A packing, tiling or report file could not be read or written."""


# ─── Command Line ──────────────────────────────────────────────────────────────
class UsageError(BidiscError):
    """Flags that are missing, contradictory or malformed."""
