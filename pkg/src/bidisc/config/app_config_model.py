# ♥♥─── Settings Model ───────────────────────────────────────────────────────────
from __future__ import annotations

import os
from typing import Any, Self
from pathlib import Path
from functools import lru_cache

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


@lru_cache
def get_project_root() -> Path:
    """Detect the project root from the usual marker files."""
    current = Path.cwd()
    for parent in [current, *list(current.parents)]:
        if any((parent / indicator).exists() for indicator in [".git", "pyproject.toml"]):
            return parent
    return current


root = get_project_root()
app_data = root / "app_data"


@lru_cache
def get_default_env_path() -> Path:
    """Path of the optional environment file."""
    return app_data / "config" / ".env"


ENV_DEFAULT_CONTENT = """# bidisc configuration
# ─── Verification ──────────────────────────────────────────────────
# BIDISC_VERIFY_DEPTH_LIMIT=40
# BIDISC_VERIFY_EPSILON_TIGHT=0.001
# BIDISC_VERIFY_PRECISION_BITS=53
# BIDISC_VERIFY_ETA=0.0
# BIDISC_VERIFY_SUBDIVISIONS=100
# BIDISC_VERIFY_WORKERS=4
# BIDISC_VERIFY_SAMPLE_POINTS=0
# ─── Constructions ─────────────────────────────────────────────────
# BIDISC_CONSTRUCT_EXTENT=100
# BIDISC_CONSTRUCT_WINDOW_K=50.0
# ─── Census ────────────────────────────────────────────────────────
# BIDISC_CENSUS_WINDOW=30.0
# BIDISC_CENSUS_MARGIN=8.0
# ─── Logging ───────────────────────────────────────────────────────
# BIDISC_LOG_CONSOLE_LEVEL=INFO
# BIDISC_LOG_FILE_LEVEL=DEBUG
# BIDISC_LOG_DIRECTORY=app_data/logs
"""


def _section(prefix: str) -> SettingsConfigDict:
    return SettingsConfigDict(
        env_prefix=f"BIDISC_{prefix}_",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        env_file=get_default_env_path(),
    )


# ─── Verification ──────────────────────────────────────────────────────────────
class VerificationSettings(BaseSettings):
    """Knobs of the potential-scheme certifier."""

    model_config = _section("VERIFY")
    depth_limit: int = Field(default=40, ge=1, le=200, title="Depth Limit", description="Deepest bisection level of the dichotomy")
    epsilon_tight: float = Field(default=1e-3, gt=0, le=0.1, title="Tight Radius", description="Reach of the first-order rule around tight triangles")
    precision_bits: int = Field(default=53, ge=53, le=4096, title="Precision", description="mpmath bits for constants, predicates and point samples; interval endpoints stay binary64")
    eta: float = Field(default=0.0, ge=0, title="Eta", description="Extra potential required around bad neighbourhoods")
    subdivisions: int = Field(default=100, ge=2, le=100_000, title="Subdivisions", description="Number of sweep intervals over [0, 1]")
    workers: int | None = Field(default=None, ge=1, title="Workers", description="Worker processes; logical cores when unset")
    sample_points: int = Field(default=0, ge=0, title="Sample Points", description="High-precision point checks per certified box")

    @property
    def effective_workers(self) -> int:
        return self.workers or os.cpu_count() or 1


# ─── Constructions ─────────────────────────────────────────────────────────────
class ConstructionSettings(BaseSettings):
    """Sizes and tolerances of the explicit packings."""

    model_config = _section("CONSTRUCT")
    extent: int = Field(default=100, ge=1, le=10_000, title="Extent", description="Size parameter of the constructions")
    window_k: float = Field(default=50.0, gt=0, title="Density Window", description="Half-width of the density window")
    overlap_tolerance: float = Field(default=1e-9, ge=0, title="Overlap Tolerance")
    edge_tolerance: float = Field(default=1e-9, ge=0, title="Edge Tolerance")


# ─── Census ────────────────────────────────────────────────────────────────────
class CensusSettings(BaseSettings):
    """Window geometry of the neighbourhood census."""

    model_config = _section("CENSUS")
    window: float = Field(default=30.0, gt=0, title="Window", description="Half-width of the counted window")
    margin: float = Field(default=8.0, ge=0, title="Margin", description="Extra border triangulated around the window")
    tile_size: float | None = Field(default=40.0, gt=0, title="Tile Size", description="Side of the tiles processed in parallel")


# ─── Logging ───────────────────────────────────────────────────────────────────
class LoggingSettings(BaseSettings):
    """Levels and destination of the log sinks."""

    model_config = _section("LOG")
    console_level: str = Field(default="INFO", pattern=r"^(TRACE|DEBUG|INFO|SUCCESS|WARNING|ERROR|CRITICAL)$")
    file_level: str = Field(default="DEBUG", pattern=r"^(TRACE|DEBUG|INFO|SUCCESS|WARNING|ERROR|CRITICAL)$")
    log_file: str = Field(default="bidisc.log", min_length=1, pattern=r"^[a-zA-Z0-9_\-\.]+$")
    directory: Path = Field(default_factory=lambda: app_data / "logs", title="Log Directory")


# ─── Application ───────────────────────────────────────────────────────────────
class ApplicationSettings(BaseSettings):
    """All settings sections."""

    model_config = SettingsConfigDict(case_sensitive=False, extra="ignore", env_file=get_default_env_path())
    verification: VerificationSettings = Field(default_factory=VerificationSettings, title="Verification")
    construction: ConstructionSettings = Field(default_factory=ConstructionSettings, title="Constructions")
    census: CensusSettings = Field(default_factory=CensusSettings, title="Census")
    logging: LoggingSettings = Field(default_factory=LoggingSettings, title="Logging")

    @model_validator(mode="after")
    def _check_census_tiles(self) -> Self:
        tile = self.census.tile_size
        if tile is not None and tile <= 2 * self.census.margin:
            msg = f"census tile size {tile} must exceed twice the margin {self.census.margin}"
            raise ValueError(msg)
        return self

    def get_configuration_summary(self) -> dict[str, Any]:
        """Flat view of every section, for report headers."""
        return {name: section.model_dump() for name, section in self}

    @staticmethod
    def write_default_env_file(path: Path | None = None) -> Path:
        """Create a commented environment file if none exists."""
        target = path or get_default_env_path()
        if not target.exists():
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(ENV_DEFAULT_CONTENT, encoding="utf-8")
        return target
