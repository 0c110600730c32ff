from __future__ import annotations

import pytest

from bidisc.utils import load_json, save_json, write_text_atomic, load_pydantic_model, save_pydantic_model
from bidisc.core.errors import DocumentError
from bidisc.core.interval import Interval
from bidisc.core.packing import Disc, Packing
from bidisc.core.constructions import column_tiling
from bidisc.core.models.documents import TilingDocument, PackingDocument
from bidisc.core.models.base_enums import RadiusClass
from bidisc.core.models.base_model import IntervalRecord


def test_atomic_write_leaves_no_temporary_files(tmp_path):
    target = write_text_atomic(tmp_path / "nested" / "out.txt", "first")
    write_text_atomic(target, "second")
    assert target.read_text(encoding="utf-8") == "second"
    assert [p.name for p in target.parent.iterdir()] == ["out.txt"]


def test_json_keys_are_sorted(tmp_path):
    path = save_json({"b": 1, "a": [1, 2]}, tmp_path / "data.json")
    assert path.read_text(encoding="utf-8") == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    assert load_json(path) == {"a": [1, 2], "b": 1}


def test_json_rejects_nan(tmp_path):
    with pytest.raises(DocumentError, match="serialisable"):
        save_json({"x": float("nan")}, tmp_path / "nan.json")


def test_missing_and_malformed_files(tmp_path):
    with pytest.raises(DocumentError, match="not found"):
        load_json(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(DocumentError):
        load_json(broken)
    with pytest.raises(DocumentError, match="PackingDocument"):
        load_pydantic_model(PackingDocument, broken)


def test_invalid_document(tmp_path):
    path = save_json({"discs": [{"x": 0.0, "y": 0.0, "size": "M"}]}, tmp_path / "bad.json")
    with pytest.raises(DocumentError, match="not a valid PackingDocument"):
        load_pydantic_model(PackingDocument, path)


def test_packing_document_is_stable(tmp_path):
    p = Packing((Disc(0.1, -2.0 / 3.0, RadiusClass.LARGE), Disc(2.0**0.5, 1e-17, RadiusClass.SMALL)))
    first = save_pydantic_model(PackingDocument.from_packing(p), tmp_path / "first.json")
    back = load_pydantic_model(PackingDocument, first).to_packing()
    assert back.discs == p.discs
    second = save_pydantic_model(PackingDocument.from_packing(back), tmp_path / "second.json")
    assert first.read_bytes() == second.read_bytes()


def test_tiling_document(tmp_path):
    t = column_tiling(0.75, 3)
    path = save_pydantic_model(TilingDocument.from_tiling(t), "tiling.json", folder=tmp_path)
    assert path == (tmp_path / "tiling.json").resolve()
    back = load_pydantic_model(TilingDocument, path).to_tiling()
    assert back.vertices == t.vertices
    assert back.tiles == t.tiles
    back.validate()


def test_interval_record_reads_back_the_same_doubles():
    value = Interval(0.1, 2.0 / 3.0)
    assert IntervalRecord.from_interval(value).to_interval() == value
    assert str(IntervalRecord(lo="0.5", hi="1.0")) == "[0.5, 1.0]"
