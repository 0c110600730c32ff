# ♥♥─── UI Init ──────────────────────────────────────────────────────────────
from __future__ import annotations

from .console import console, status_style, switch_theme


__all__ = ["console", "status_style", "switch_theme"]
