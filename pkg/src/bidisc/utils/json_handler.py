# ♥♥─── JSON Handler ─────────────────────────────────────────────────────────────
from __future__ import annotations

import os
import json
from typing import Any
from pathlib import Path
import tempfile

from pydantic import BaseModel, ValidationError

from bidisc.custom_logger import log
from bidisc.core.errors import DocumentError


type JSONSerializable = dict[str, Any] | list[Any]


# ─── Resolve Path ─────────────────────────────────────────────────────────────
def _resolve_path(filepath: str | Path, folder: str | Path | None) -> Path:
    """Resolve the full file path.

    :param filepath: The base file path or filename.
    :param folder: Optional folder path.
    :return: The resolved absolute path.
    """
    if folder:
        return Path(folder).resolve() / Path(filepath).name
    return Path(filepath).resolve()


# ─── Atomic Write ─────────────────────────────────────────────────────────────
def write_text_atomic(path: Path, text: str) -> Path:
    """Write ``text`` to a sibling temporary file, then move it over ``path``.

    :raises DocumentError: If the directory cannot be created or written.
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
            Path(tmp).replace(path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
    except OSError as e:
        msg = f"cannot write '{path}': {e}"
        raise DocumentError(msg) from e
    return path


# ─── Save JSON ────────────────────────────────────────────────────────────────
def save_json(data: JSONSerializable, filepath: str | Path, folder: str | Path | None = None, indent: int = 2) -> Path:
    """Save a dictionary or list as JSON with sorted keys and a trailing newline.

    :param data: The Python dictionary or list to save.
    :param filepath: The full path or filename for the output file.
    :param folder: Optional folder path.
    :param indent: JSON indentation level.
    :return: The written path.
    :raises DocumentError: If the data is not serialisable or the file cannot be written.
    """
    output_path = _resolve_path(filepath, folder)
    try:
        text = json.dumps(data, indent=indent, ensure_ascii=False, sort_keys=True, allow_nan=False)
    except (TypeError, ValueError) as e:
        msg = f"data for '{output_path}' is not JSON serialisable: {e}"
        raise DocumentError(msg) from e
    write_text_atomic(output_path, text + "\n")
    log.debug("saved JSON to '{}'", output_path)
    return output_path


# ─── Load JSON ────────────────────────────────────────────────────────────────
def load_json(filepath: str | Path, folder: str | Path | None = None) -> JSONSerializable:
    """Load data from a JSON file.

    :param filepath: The path or filename of the JSON file.
    :param folder: Optional folder path.
    :return: The loaded data.
    :raises DocumentError: If the file is missing, unreadable or malformed.
    """
    input_path = _resolve_path(filepath, folder)
    if not input_path.is_file():
        msg = f"JSON file not found at '{input_path}'"
        raise DocumentError(msg)
    try:
        return json.loads(input_path.read_text(encoding="utf-8"))  # type: ignore[no-any-return]
    except (OSError, json.JSONDecodeError) as e:
        msg = f"failed to load or parse JSON from '{input_path}': {e}"
        raise DocumentError(msg) from e


# ─── Save Model ───────────────────────────────────────────────────────────────
def save_pydantic_model(model: BaseModel, filepath: str | Path, folder: str | Path | None = None, indent: int = 2) -> Path:
    """Save a Pydantic model as JSON in field order.

    :param model: The Pydantic model instance to save.
    :param filepath: The path or filename for the JSON file.
    :param folder: Optional folder path.
    :param indent: JSON indentation level.
    :return: The written path.
    :raises DocumentError: If the file cannot be written.
    """
    output_path = _resolve_path(filepath, folder)
    write_text_atomic(output_path, model.model_dump_json(indent=indent) + "\n")
    log.info("saved {} to '{}'", type(model).__name__, output_path)
    return output_path


# ─── Load Model ───────────────────────────────────────────────────────────────
def load_pydantic_model[T: BaseModel](model_class: type[T], filepath: str | Path, folder: str | Path | None = None) -> T:
    """Load a JSON file into a Pydantic model instance.

    :param model_class: The Pydantic model class (e.g., PackingDocument).
    :param filepath: The path or filename of the JSON file.
    :param folder: Optional folder path.
    :return: An instance of `model_class`.
    :raises DocumentError: If the file is missing or does not validate.
    """
    input_path = _resolve_path(filepath, folder)
    if not input_path.is_file():
        msg = f"JSON file not found at '{input_path}'"
        raise DocumentError(msg)
    try:
        return model_class.model_validate_json(input_path.read_text(encoding="utf-8"))
    except ValidationError as e:
        msg = f"'{input_path}' is not a valid {model_class.__name__}: {e.error_count()} error(s), first: {e.errors()[0]['msg']}"
        raise DocumentError(msg) from e
    except OSError as e:
        msg = f"cannot read '{input_path}': {e}"
        raise DocumentError(msg) from e
