from __future__ import annotations

from bidisc.main import main


if __name__ == "__main__":
    raise SystemExit(main())
