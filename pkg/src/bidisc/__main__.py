from __future__ import annotations

from bidisc.main import main


raise SystemExit(main())
