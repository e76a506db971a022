"""
Tests for padic_kwapien.serialize module.
"""

import csv
import io
import math

import pytest

from padic_kwapien.errors import InvalidInputError
from padic_kwapien.serialize import csvio, jsonio


def test_json_dumps_is_canonical():
    text = jsonio.dumps({"b": 0.1, "a": [1, 2]})
    assert text == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 0.1\n}\n'
    with pytest.raises(InvalidInputError):
        jsonio.dumps({"x": math.nan})


def test_json_loads_and_read(tmp_path):
    with pytest.raises(InvalidInputError):
        jsonio.loads("{not json")
    with pytest.raises(InvalidInputError):
        jsonio.read_json(tmp_path / "missing.json")
    path = jsonio.write_text(tmp_path / "nested" / "out.json", jsonio.dumps({"x": 1}))
    assert jsonio.read_json(path) == {"x": 1}
    assert b"\r" not in path.read_bytes()


def test_content_hash():
    h = jsonio.content_hash({"x": [1, 2]})
    assert len(h) == 16
    assert h == jsonio.content_hash({"x": [1, 2]})
    assert h != jsonio.content_hash({"x": [2, 1]})


def test_csv_dumps():
    text = csvio.dumps([{"p": 2, "value": 0.1, "error": None}], ["p", "value", "error"])
    assert text == "p,value,error\n2,0.1,\n"
    rows = list(csv.DictReader(io.StringIO(text)))
    assert float(rows[0]["value"]) == 0.1


def test_flatten():
    flat = csvio.flatten({"a": 1, "b": {"c": 2, "d": {"e": 3}}, "f": [1, 2]})
    assert flat == {"a": 1, "b.c": 2, "b.d.e": 3, "f": "[1, 2]"}
