from __future__ import annotations

import pytest

from bidisc.custom_logger import log, sinks, logged, setup_logging


def test_file_sink_receives_debug_messages(tmp_path):
    setup_logging("WARNING", "DEBUG", "run.log", log_dir=tmp_path / "logs")
    try:
        log.debug("interval {} solved", "[0.5, 0.51]")
        log.complete()
        assert sinks.log_path == tmp_path / "logs" / "run.log"
        assert "interval [0.5, 0.51] solved" in sinks.log_path.read_text(encoding="utf-8")
    finally:
        setup_logging()
    assert sinks.log_path is None


def test_logged_stage_reports_failures(tmp_path):
    setup_logging("WARNING", "DEBUG", "stage.log", log_dir=tmp_path)

    @logged
    def stage() -> None:
        msg = "no ceiling"
        raise RuntimeError(msg)

    try:
        with pytest.raises(RuntimeError):
            stage()
        text = (tmp_path / "stage.log").read_text(encoding="utf-8")
        assert "stage failed after" in text
        assert "no ceiling" in text
    finally:
        setup_logging()
