# ♥♥─── Core Init ────────────────────────────────────────────────────────────────
