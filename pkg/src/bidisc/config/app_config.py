# ♥♥─── App Config ───────────────────────────────────────────────────────────────
from __future__ import annotations

from functools import lru_cache

from pydantic import ValidationError

from bidisc.custom_logger import log

from .app_config_model import ApplicationSettings


# ─── Get Settings ──────────────────────────────────────────────────────────────
@lru_cache(maxsize=1)
def get_application_settings() -> ApplicationSettings:
    """Load and validate the settings once.

    :returns: The :class:`ApplicationSettings` instance.
    :raises SystemExit: If the environment holds invalid values.
    """
    log.debug("Initializing application configuration...")
    try:
        settings = ApplicationSettings()
    except ValidationError as e:
        details = "\n".join(f"  - {err['loc']}: {err['msg']} (input was: {err.get('input', 'N/A')})" for err in e.errors())
        log.error("Configuration validation failed:\n{}", details)
        error = "FATAL: invalid bidisc configuration. Check the BIDISC_* variables and app_data/config/.env."
        raise SystemExit(error) from e
    log.debug("Verification settings: {}", settings.verification.model_dump())
    return settings


def get_settings() -> ApplicationSettings:
    return get_application_settings()
