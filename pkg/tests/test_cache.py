"""Workspace cache: versioning, atomicity, byte-identical hits."""

import json
import os
from pathlib import Path

import pytest

from webkup.cache import CACHE_VERSION, Workspace, default_cache_dir


def test_default_dir_env_override(monkeypatch, tmp_path):
    monkeypatch.setenv("WEBKUP_CACHE", str(tmp_path / "alt"))
    assert default_cache_dir() == tmp_path / "alt"
    assert Workspace.from_env().root == tmp_path / "alt"
    monkeypatch.delenv("WEBKUP_CACHE")
    assert default_cache_dir().name == "webkup"


def test_store_load_roundtrip(tmp_path):
    ws = Workspace(tmp_path)
    payload = {"multiplicities": {"1m": 1}, "sum_of_squares": 1}
    path = ws.store("blocks", "+-", payload)
    assert path.exists()
    assert ws.load("blocks", "+-") == payload


def test_miss_on_absent_and_unknown_kind(tmp_path):
    ws = Workspace(tmp_path)
    assert ws.load("blocks", "+-") is None
    with pytest.raises(ValueError):
        ws.artifact_path("bogus", "+-")


def test_version_stamp_and_stale_miss(tmp_path):
    ws = Workspace(tmp_path)
    ws.store("basis", "+-", {"a": 1})
    path = ws.artifact_path("basis", "+-")
    doc = json.loads(path.read_text())
    assert doc["version"] == CACHE_VERSION
    assert doc["signs"] == "+-"
    doc["version"] = CACHE_VERSION + 1
    path.write_text(json.dumps(doc))
    assert ws.load("basis", "+-") is None


def test_corrupted_payload_misses(tmp_path):
    ws = Workspace(tmp_path)
    ws.store("basis", "+-", {"a": 1})
    path = ws.artifact_path("basis", "+-")
    doc = json.loads(path.read_text())
    doc["payload"] = {"a": 2}  # hash no longer matches
    path.write_text(json.dumps(doc))
    assert ws.load("basis", "+-") is None


def test_rewrites_are_byte_identical(tmp_path):
    ws = Workspace(tmp_path)
    payload = {"webs": {"1m": {"bottom_weight": [0, 3], "slices": []}}}
    path = ws.store("basis", "+-", payload)
    first = path.read_bytes()
    ws.store("basis", "+-", payload)
    assert path.read_bytes() == first


def test_no_temp_litter(tmp_path):
    ws = Workspace(tmp_path)
    ws.store("dualcan", "++--", {"elements": {}})
    leftovers = [p for p in (tmp_path / "dualcan").iterdir() if p.suffix == ".tmp"]
    assert leftovers == []


def test_fetch_computes_once(tmp_path):
    ws = Workspace(tmp_path)
    calls = []

    def compute():
        calls.append(1)
        return {"n": 42}

    assert ws.fetch("blocks", "+++", compute) == {"n": 42}
    assert ws.fetch("blocks", "+++", compute) == {"n": 42}
    assert len(calls) == 1
