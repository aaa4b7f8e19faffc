"""
On-disk cache of per-system tables: the enumerated Weyl group (canonical
words) and one reduced word per reflection.

One JSON file per (type, rank), wrapped with a format version and a sha256 of
the payload.  Anything unreadable, mismatched or tampered with is rebuilt
silently.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from pathlib import Path

from .rootsys import RootSystem
from .weyl import DEFAULT_CAP, elements, from_word, reflection_word

FORMAT = "schubaut.cache/1"
ENV_VAR = "SCHUBAUT_CACHE"


def _digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _build_payload(rs: RootSystem, cap: int) -> dict:
    return {
        "system": rs.name,
        "elements": [list(w.word) for w in elements(rs, cap)],
        "reflection_words": {",".join(map(str, b)): list(reflection_word(rs, b))
                             for b in rs.positive_roots},
    }


@dataclass
class TableCache:
    directory: Path | None

    @classmethod
    def from_env(cls, directory: str | None = None) -> "TableCache":
        d = directory or os.environ.get(ENV_VAR)
        return cls(Path(d) if d else None)

    def path(self, rs: RootSystem) -> Path | None:
        return self.directory / f"{rs.name}.json" if self.directory else None

    def _load(self, rs: RootSystem) -> dict | None:
        p = self.path(rs)
        if p is None or not p.exists():
            return None
        try:
            doc = json.loads(p.read_text())
            if doc.get("format") != FORMAT or doc.get("sha256") != _digest(doc["payload"]):
                return None
            if doc["payload"].get("system") != rs.name:
                return None
            return doc["payload"]
        except (OSError, ValueError, KeyError, TypeError, AttributeError):
            return None

    def _store(self, rs: RootSystem, payload: dict):
        p = self.path(rs)
        if p is None:
            return
        p.parent.mkdir(parents=True, exist_ok=True)
        doc = {"format": FORMAT, "sha256": _digest(payload), "payload": payload}
        tmp = p.with_suffix(".tmp")
        tmp.write_text(json.dumps(doc, sort_keys=True))
        tmp.replace(p)

    def tables(self, rs: RootSystem, cap: int = DEFAULT_CAP) -> dict:
        payload = self._load(rs)
        if payload is None or len(payload["elements"]) > cap:
            payload = _build_payload(rs, cap)
            self._store(rs, payload)
        return payload

    def elements(self, rs: RootSystem, cap: int = DEFAULT_CAP):
        return [from_word(rs, wd) for wd in self.tables(rs, cap)["elements"]]
