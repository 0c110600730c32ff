# ♥♥─── Config Init ──────────────────────────────────────────────────────────────
from __future__ import annotations

from .app_config import get_settings, get_application_settings
from .app_config_model import LoggingSettings, CensusSettings, ApplicationSettings, ConstructionSettings, VerificationSettings


__all__ = ["ApplicationSettings", "CensusSettings", "ConstructionSettings", "LoggingSettings", "VerificationSettings", "get_application_settings", "get_settings"]
