# ♥♥─── Console Style Manager ────────────────────────────────────────────────────
from __future__ import annotations

import json
from typing import TYPE_CHECKING
from pathlib import Path

from loguru import logger as log

from rich.style import Style
from rich.theme import Theme
from rich.console import Console


if TYPE_CHECKING:
    from collections.abc import Mapping
# ─── Configuration & Types ─────────────────────────────────────────────────────
type Palette = dict[str, str]
type StyleMapping = dict[str, Style]
THEMES_JSON_PATH = Path(__file__).parent / "themes.json"


# ─── Style Mapper ──────────────────────────────────────────────────────────────
class StyleMapper:
    """Build the named styles of reports and log lines from a colour palette."""

    PALETTES: dict[str, Palette] = {
        "rose_pine": {
            "background": "#191724",
            "muted": "#6e6a86",
            "subtle": "#908caa",
            "text": "#e0def4",
            "love": "#eb6f92",
            "gold": "#f6c177",
            "rose": "#ebbcba",
            "pine": "#31748f",
            "foam": "#9ccfd8",
            "iris": "#c4a7e7",
        },
        "plain": {
            "background": "default",
            "muted": "bright_black",
            "subtle": "white",
            "text": "default",
            "love": "red",
            "gold": "yellow",
            "rose": "magenta",
            "pine": "blue",
            "foam": "cyan",
            "iris": "magenta",
        },
    }
    # style name -> (palette key, bold, dim)
    ROLES: dict[str, tuple[str, bool, bool]] = {
        "primary": ("iris", True, False),
        "muted": ("muted", False, True),
        "text": ("text", False, False),
        "number": ("foam", False, False),
        "interval": ("rose", False, False),
        "stage": ("iris", False, False),
        "status.certified": ("foam", True, False),
        "status.failed": ("love", True, False),
        "status.depth_exceeded": ("gold", True, False),
        "regime.large": ("pine", False, False),
        "regime.small": ("rose", False, False),
        "panel.border": ("pine", False, False),
        "panel.title": ("iris", True, False),
        "table.header": ("iris", True, False),
        "log.level.trace": ("muted", False, True),
        "log.level.debug": ("muted", False, False),
        "log.level.info": ("pine", False, False),
        "log.level.success": ("foam", False, False),
        "log.level.warning": ("gold", False, False),
        "log.level.error": ("love", False, False),
        "log.level.critical": ("love", True, False),
        "log.time": ("muted", False, False),
        "log.separator": ("pine", False, False),
        "log.module": ("iris", False, True),
    }

    @classmethod
    def create_styles(cls, palette: Mapping[str, str]) -> StyleMapping:
        """Create every role style from ``palette``; missing colours fall back to the default colour."""
        styles: StyleMapping = {}
        for name, (key, bold, dim) in cls.ROLES.items():
            colour = palette.get(key, "default")
            styles[name] = Style(color=None if colour == "default" else colour, bold=bold, dim=dim)
        return styles


class ConsoleManager:
    """Create rich consoles with a named palette."""

    def __init__(self, themes_file_path: Path | None = None) -> None:
        self.themes_file_path = themes_file_path or THEMES_JSON_PATH
        self._palettes: dict[str, Palette] | None = None

    def _load_palettes(self) -> dict[str, Palette]:
        """Built-in palettes, extended by an optional ``themes.json`` next to this module."""
        if self._palettes is not None:
            return self._palettes
        palettes = {name: dict(colours) for name, colours in StyleMapper.PALETTES.items()}
        if self.themes_file_path.exists():
            try:
                data = json.loads(self.themes_file_path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as e:
                log.warning("Ignoring unreadable theme file {}: {}", self.themes_file_path, e)
            else:
                palettes.update({name: colours for name, colours in data.get("themes", data).items() if isinstance(colours, dict)})
        self._palettes = palettes
        return palettes

    def create_theme(self, theme_name: str) -> Theme:
        palettes = self._load_palettes()
        if theme_name not in palettes:
            log.warning("Theme '{}' not found, using the plain palette.", theme_name)
        return Theme(StyleMapper.create_styles(palettes.get(theme_name, StyleMapper.PALETTES["plain"])))

    def create_console(self, theme_name: str = "rose_pine", **kwargs: object) -> Console:
        """Create a console themed with ``theme_name``; extra keyword arguments go to :class:`Console`."""
        return Console(theme=self.create_theme(theme_name), soft_wrap=True, highlight=False, **kwargs)  # type: ignore[arg-type]

    def switch_theme(self, console: Console, theme_name: str) -> bool:
        if theme_name not in self._load_palettes():
            return False
        console.push_theme(self.create_theme(theme_name))
        return True

    def get_available_themes(self) -> list[str]:
        return list(self._load_palettes())
