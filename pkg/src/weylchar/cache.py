"""Content-addressed on-disk cache for computed characters.

Entries are WeightFunction JSON files named by the SHA-256 of the (datum,
weight) request. Writes go through a temp file and os.replace, so readers
never see partial entries; anything unreadable or malformed is treated as
a miss and recomputed, never trusted.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .characters import WeightFunction, freudenthal_character
from .root_data import RootDatum, Weight

ENV_VAR = "WEYLCHAR_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "weylchar"


class CharacterCache:
    """Disk cache with hit/miss counters for the run manifest."""

    def __init__(self, root: Path | str | None = None, enabled: bool = True):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.enabled = enabled
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(datum: RootDatum, lam: Weight) -> str:
        blob = json.dumps(
            {"datum": datum.to_json(), "weight": list(lam)},
            sort_keys=True,
            separators=(",", ":"),
        )
        return hashlib.sha256(blob.encode()).hexdigest()

    def _path(self, datum: RootDatum, lam: Weight) -> Path:
        return self.root / f"{self.key(datum, lam)}.json"

    def load(self, datum: RootDatum, lam: Weight) -> WeightFunction | None:
        path = self._path(datum, lam)
        try:
            obj = json.loads(path.read_text())
            wf = WeightFunction.from_json(obj)
        except (OSError, ValueError, KeyError, TypeError):
            return None
        if wf.datum != datum:
            return None
        return wf

    def store(self, datum: RootDatum, lam: Weight, wf: WeightFunction) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        path = self._path(datum, lam)
        payload = json.dumps(wf.to_json(), sort_keys=True, separators=(",", ":"))
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def character(self, datum: RootDatum, lam: Weight) -> WeightFunction:
        """freudenthal_character through the cache."""
        if not self.enabled:
            return freudenthal_character(datum, lam)
        got = self.load(datum, lam)
        if got is not None:
            self.hits += 1
            return got
        self.misses += 1
        wf = freudenthal_character(datum, lam)
        self.store(datum, lam, wf)
        return wf
