# ♥♥─── Logging ──────────────────────────────────────────────────────────────────
"""Loguru setup: a rich console sink always, a rotating file sink once the CLI knows where."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any
from functools import wraps
import time
import logging

from loguru import logger

from rich.text import Text

from .ui.console import console


if TYPE_CHECKING:
    from pathlib import Path
    from collections.abc import Callable

# ─── Levels ────────────────────────────────────────────────────────────────────
LEVEL_ICONS: dict[str, str] = {
    "TRACE": "·",
    "DEBUG": "∘",
    "INFO": "•",
    "SUCCESS": "✓",
    "WARNING": "!",
    "ERROR": "✗",
    "CRITICAL": "‼",
}
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {process} | {name}:{function}:{line} - {message}"
# Third-party loggers that chatter at INFO while drawing or triangulating.
QUIET_LOGGERS = ("matplotlib", "PIL", "fontTools")


class _InterceptHandler(logging.Handler):
    """Forward standard-library records to loguru at the caller's depth."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level: str | int = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno
        frame, depth = logging.currentframe(), 2
        while frame and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1
        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def _console_sink(message: Any) -> None:
    record = message.record
    level = record["level"].name
    style = f"log.level.{level.lower()}"
    try:
        body = Text.from_markup(record["message"], style=style)
    except Exception:
        body = Text(record["message"], style=style)
    console.print(
        Text(record["time"].strftime("%H:%M:%S"), style="log.time"),
        Text("|", style="log.separator"),
        Text(record["module"], style="log.module"),
        Text(f"{LEVEL_ICONS.get(level, '•'):<2}", style=style),
        body,
        sep=" ",
    )


# ─── Setup ─────────────────────────────────────────────────────────────────────
class LogSinks:
    """Owns the loguru sinks so that reconfiguration replaces rather than stacks them."""

    def __init__(self) -> None:
        self.log_path: Path | None = None
        self.console_level = "INFO"

    def configure(
        self,
        console_level: str = "INFO",
        file_level: str = "DEBUG",
        log_file: str = "bidisc.log",
        log_dir: Path | None = None,
        rotation: str = "10 MB",
        retention: str = "7 days",
    ) -> None:
        """Install the console sink and, with ``log_dir``, a rotating file sink.

        :param console_level: Minimum level on the console.
        :param file_level: Minimum level in the log file.
        :param log_file: File name inside ``log_dir``.
        :param log_dir: Directory of the log file; no file sink when omitted.
        :param rotation: Size at which the file is rotated.
        :param retention: Age after which rotated files are removed.
        """
        logger.remove()
        logger.add(_console_sink, level=console_level, format="{message}", colorize=False, backtrace=False, diagnose=False)
        self.console_level = console_level
        self.log_path = None
        if log_dir is not None:
            log_dir.mkdir(parents=True, exist_ok=True)
            self.log_path = log_dir / log_file
            logger.add(self.log_path, level=file_level, format=FILE_FORMAT, rotation=rotation, retention=retention, compression="zip", encoding="utf-8", diagnose=False)
        logging.basicConfig(handlers=[_InterceptHandler()], level=0, force=True)
        for name in QUIET_LOGGERS:
            logging.getLogger(name).setLevel(logging.WARNING)


sinks = LogSinks()
sinks.configure()


def setup_logging(console_level: str = "INFO", file_level: str = "DEBUG", log_file: str = "bidisc.log", **kwargs: Any) -> None:
    """Reconfigure the sinks; called by the CLI once settings are loaded."""
    sinks.configure(console_level, file_level, log_file, **kwargs)


# ─── Stage Timing ──────────────────────────────────────────────────────────────
def logged[**P, R](func: Callable[P, R]) -> Callable[P, R]:
    """Log start, duration and failure of a pipeline stage at DEBUG."""
    name = f"{func.__module__}.{func.__qualname__}"

    @wraps(func)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
        logger.debug("→ {}", name)
        started = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.error("{} failed after {:.2f}s: {}", name, time.perf_counter() - started, e)
            raise
        logger.debug("{} done in {:.2f}s", name, time.perf_counter() - started)
        return result

    return wrapper


log = logger
