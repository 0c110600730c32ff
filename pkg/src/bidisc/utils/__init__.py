# ♥♥─── Utils Init ───────────────────────────────────────────────────────────────
from __future__ import annotations

from .plot_data import emit_plot_data, render_curve_svg, render_tiling_svg, render_packing_svg
from .json_handler import load_json, save_json, write_text_atomic, load_pydantic_model, save_pydantic_model


__all__ = [
    "emit_plot_data",
    "load_json",
    "load_pydantic_model",
    "render_curve_svg",
    "render_packing_svg",
    "render_tiling_svg",
    "save_json",
    "save_pydantic_model",
    "write_text_atomic",
]
