from __future__ import annotations

import pytest

from bidisc.config.app_config import get_settings, get_application_settings
from bidisc.config.app_config_model import ApplicationSettings, VerificationSettings


def test_defaults():
    settings = get_settings()
    assert settings.verification.depth_limit == 40
    assert settings.verification.epsilon_tight == pytest.approx(1e-3)
    assert settings.verification.precision_bits == 53
    assert settings.construction.extent == 100
    assert settings.census.window == 30.0


def test_settings_are_cached():
    assert get_settings() is get_settings()


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("BIDISC_VERIFY_DEPTH_LIMIT", "12")
    monkeypatch.setenv("BIDISC_CENSUS_WINDOW", "7.5")
    get_application_settings.cache_clear()
    settings = get_settings()
    assert settings.verification.depth_limit == 12
    assert settings.census.window == 7.5


def test_invalid_environment_exits(monkeypatch):
    monkeypatch.setenv("BIDISC_VERIFY_PRECISION_BITS", "12")
    get_application_settings.cache_clear()
    with pytest.raises(SystemExit, match="invalid bidisc configuration"):
        get_settings()


def test_census_tiles_must_exceed_the_margin(monkeypatch):
    monkeypatch.setenv("BIDISC_CENSUS_TILE_SIZE", "10")
    monkeypatch.setenv("BIDISC_CENSUS_MARGIN", "8")
    get_application_settings.cache_clear()
    with pytest.raises(SystemExit):
        get_settings()


def test_effective_workers():
    assert VerificationSettings(workers=3).effective_workers == 3
    assert VerificationSettings(workers=None).effective_workers >= 1


def test_default_env_file(tmp_path):
    target = ApplicationSettings.write_default_env_file(tmp_path / "config" / ".env")
    assert "BIDISC_VERIFY_DEPTH_LIMIT" in target.read_text(encoding="utf-8")
    target.write_text("# edited\n", encoding="utf-8")
    ApplicationSettings.write_default_env_file(target)
    assert target.read_text(encoding="utf-8") == "# edited\n"
