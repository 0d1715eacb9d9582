"""On-disk cache of partition count tables.

One JSON file per (kind, r, punctual) holds the longest prefix computed so
far. Files are replaced atomically (write to a temp file, then rename), so
concurrent processes sharing a directory never see a torn file. An entry
whose algorithm stamp differs from the running code is ignored.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Callable

from .errors import MdPartError

log = logging.getLogger(__name__)

CACHE_ENV = "MDPART_CACHE_DIR"


class CacheCorrupt(MdPartError):
    pass


class TableCache:
    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def path(self, kind: str, r: int, punctual: bool) -> Path:
        return self.directory / f"{kind}-r{r}-{'punctual' if punctual else 'plain'}.json"

    def load(self, kind: str, r: int, punctual: bool, version: str) -> list[int]:
        p = self.path(kind, r, punctual)
        try:
            data = json.loads(p.read_text())
        except FileNotFoundError:
            return []
        except (OSError, ValueError):
            log.warning("ignoring unreadable cache file %s", p)
            return []
        if data.get("algorithm_version") != version:
            return []
        if (data.get("kind"), data.get("r"), data.get("punctual")) != (kind, r, punctual):
            return []
        return [int(v) for v in data.get("values", [])]

    def store(self, kind: str, r: int, punctual: bool, version: str, values: list[int]) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = {"kind": kind, "r": r, "punctual": punctual,
                   "algorithm_version": version, "n_max": len(values) - 1,
                   "values": [str(v) for v in values]}
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh)
            os.replace(tmp, self.path(kind, r, punctual))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def table(self, kind: str, r: int, n_max: int, punctual: bool, version: str,
              compute: Callable[[int], list[int]]) -> list[int]:
        """Counts 0..n_max, computing only when the cached prefix is too short.

        A longer table is written only after checking that it agrees with the
        prefix already on disk.
        """
        cached = self.load(kind, r, punctual, version)
        if len(cached) > n_max:
            return cached[: n_max + 1]
        fresh = compute(n_max)
        if fresh[: len(cached)] != cached:
            raise CacheCorrupt(f"cached {kind} table for r={r} disagrees with a fresh computation")
        self.store(kind, r, punctual, version, cached + fresh[len(cached):])
        return fresh


def default_cache_dir() -> str | None:
    return os.environ.get(CACHE_ENV) or None
