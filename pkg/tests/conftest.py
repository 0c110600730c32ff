# ♥♥─── Shared Fixtures ──────────────────────────────────────────────────────────
from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from bidisc.config.app_config import get_application_settings
from bidisc.core.models.base_enums import RadiusClass
from bidisc.core.constructions import hexagonal_packing, square_grid_packing


if TYPE_CHECKING:
    from pathlib import Path
    from collections.abc import Iterator

    from bidisc.core.packing import Packing


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Fresh settings per test, with logs written under the test's temporary directory."""
    for name in ("BIDISC_VERIFY_WORKERS", "BIDISC_VERIFY_ETA", "BIDISC_CENSUS_WINDOW", "BIDISC_CONSTRUCT_EXTENT"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("BIDISC_LOG_DIRECTORY", str(tmp_path / "logs"))
    get_application_settings.cache_clear()
    yield
    get_application_settings.cache_clear()


@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    folder = tmp_path / "out"
    folder.mkdir()
    return folder


@pytest.fixture(scope="session")
def one_to_one() -> Packing:
    return square_grid_packing(8)


@pytest.fixture(scope="session")
def hexagonal_large() -> Packing:
    return hexagonal_packing(RadiusClass.LARGE, 6)
