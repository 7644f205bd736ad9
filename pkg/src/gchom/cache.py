"""Configuration and the content-addressed result cache.

Cache layout: ``<root>/<version>/<key[:2]>/<key>.json`` with key the sha256 of
the versioned descriptor.  Writes are atomic (temp file + rename); a version
bump invalidates everything.  The cache root comes from the flag, then the
GCHOM_CACHE_DIR environment variable, then ``~/.cache/gchom``; ``None``
disables caching.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .enumeration import DEFAULT_LIMITS, Limits

CACHE_VERSION = "v1"
ENV_CACHE = "GCHOM_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "gchom"


@dataclass
class Config:
    cache_dir: Path | None = None
    prime_seed: int = 0
    limits: Limits = field(default_factory=lambda: DEFAULT_LIMITS)
    output: str = "text"  # text | json

    @classmethod
    def from_flags(cls, cache_dir: str | None, no_cache: bool,
                   prime_seed: int, max_stratum: int | None,
                   output: str = "text") -> "Config":
        root: Path | None
        if no_cache:
            root = None
        elif cache_dir:
            root = Path(cache_dir)
        else:
            root = default_cache_dir()
        limits = DEFAULT_LIMITS
        if max_stratum:
            limits = Limits(max_stratum=max_stratum,
                            max_vertices=DEFAULT_LIMITS.max_vertices,
                            max_edges=DEFAULT_LIMITS.max_edges)
        return cls(cache_dir=root, prime_seed=prime_seed, limits=limits,
                   output=output)


class Cache:
    def __init__(self, root: Path | None):
        self.root = root
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> Path:
        assert self.root is not None
        return self.root / CACHE_VERSION / key[:2] / f"{key}.json"

    @staticmethod
    def key_of(kind: str, descriptor: dict) -> str:
        blob = json.dumps(
            {"kind": kind, "version": CACHE_VERSION, "descriptor": descriptor},
            sort_keys=True,
        )
        return hashlib.sha256(blob.encode()).hexdigest()

    def get(self, kind: str, descriptor: dict) -> dict | None:
        if self.root is None:
            return None
        path = self._path(self.key_of(kind, descriptor))
        if not path.exists():
            self.misses += 1
            return None
        try:
            doc = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            self.misses += 1
            return None
        if doc.get("_checksum") != _payload_checksum(doc.get("payload")):
            self.misses += 1
            return None
        self.hits += 1
        return doc["payload"]

    def put(self, kind: str, descriptor: dict, payload: dict) -> None:
        if self.root is None:
            return
        path = self._path(self.key_of(kind, descriptor))
        path.parent.mkdir(parents=True, exist_ok=True)
        doc = {
            "kind": kind,
            "descriptor": descriptor,
            "payload": payload,
            "_checksum": _payload_checksum(payload),
        }
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                json.dump(doc, handle, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_or_compute(self, kind: str, descriptor: dict, compute):
        hit = self.get(kind, descriptor)
        if hit is not None:
            return hit, True
        payload = compute()
        self.put(kind, descriptor, payload)
        return payload, False


def _payload_checksum(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()
