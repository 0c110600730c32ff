# ♥♥─── Shared Console ─────────────────────────────────────────────────────────────
from __future__ import annotations

from rich.traceback import install

from .theme_manager import ConsoleManager


palettes = ConsoleManager()
console = palettes.create_console("rose_pine")
install(console=console, show_locals=False, width=120, suppress=["argparse"])


def switch_theme(name: str) -> None:
    """Repaint the shared console with another palette.

    :raises ValueError: If ``name`` is not a known palette.
    """
    if palettes.switch_theme(console, name):
        return
    msg = f"unknown palette {name!r}; choose one of {', '.join(palettes.get_available_themes())}"
    raise ValueError(msg)


def status_style(status: str) -> str:
    """Style name for a verification status value."""
    return f"status.{status.lower()}"
