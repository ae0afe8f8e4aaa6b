"""Versioned on-disk artifacts, one JSON file per boundary and kind.

Artifacts are plain JSON so regressions diff cleanly.  Every file
carries the schema version and a content hash of its payload; a stale
version is treated as a miss.  Writes go to a temp file in the target
directory and are renamed into place, so readers never see a partial
file and reruns are byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

CACHE_VERSION = 1

KINDS = ("basis", "expansions", "dualcan", "blocks")


def default_cache_dir() -> Path:
    env = os.environ.get("WEBKUP_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "webkup"


def _canonical(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


@dataclass
class Workspace:
    root: Path

    @classmethod
    def from_env(cls) -> "Workspace":
        return cls(default_cache_dir())

    def artifact_path(self, kind: str, signs: str) -> Path:
        if kind not in KINDS:
            raise ValueError(f"unknown artifact kind {kind!r}")
        # sign characters are shell-safe but '-' leading a filename is not
        return self.root / kind / f"S_{signs}.json"

    def load(self, kind: str, signs: str):
        """Payload, or None on a miss or a stale schema version."""
        path = self.artifact_path(kind, signs)
        try:
            doc = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            return None
        if doc.get("version") != CACHE_VERSION:
            return None
        payload = doc.get("payload")
        digest = hashlib.sha256(_canonical(payload).encode()).hexdigest()
        if doc.get("sha256") != digest:
            return None
        return payload

    def store(self, kind: str, signs: str, payload) -> Path:
        path = self.artifact_path(kind, signs)
        path.parent.mkdir(parents=True, exist_ok=True)
        doc = {
            "version": CACHE_VERSION,
            "kind": kind,
            "signs": signs,
            "sha256": hashlib.sha256(_canonical(payload).encode()).hexdigest(),
            "payload": payload,
        }
        text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path

    def fetch(self, kind: str, signs: str, compute):
        """Cached payload if fresh, else compute, store, and return it."""
        hit = self.load(kind, signs)
        if hit is not None:
            return hit
        payload = compute()
        self.store(kind, signs, payload)
        return payload
