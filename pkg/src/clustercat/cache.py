"""Per-quiver caching of representation catalogs.

In-memory always; on disk when ``CLUSTERCAT_CACHE`` names a directory.  Disk
entries are keyed by the quiver digest and written atomically.
"""

from __future__ import annotations

import logging
import os
import pickle
import tempfile
from pathlib import Path

from .quiver import ValuedQuiver
from .rep import RepCatalog

log = logging.getLogger(__name__)

ENV_VAR = "CLUSTERCAT_CACHE"
_FORMAT = 1
_MEMORY: dict[ValuedQuiver, RepCatalog] = {}


def cache_dir() -> Path | None:
    raw = os.environ.get(ENV_VAR)
    return Path(raw) if raw else None


def _path(q: ValuedQuiver, root: Path) -> Path:
    return root / f"catalog-{_FORMAT}-{q.digest}.pkl"


def get_catalog(q: ValuedQuiver) -> RepCatalog:
    if q in _MEMORY:
        return _MEMORY[q]
    root = cache_dir()
    cat = None
    if root is not None:
        path = _path(q, root)
        if path.exists():
            try:
                with path.open("rb") as fh:
                    cat = pickle.load(fh)
                if cat.quiver != q:
                    cat = None
            except Exception as exc:  # a corrupt entry is rebuilt, never trusted
                log.warning("ignoring unreadable cache entry %s: %s", path, exc)
                cat = None
    if cat is None:
        cat = RepCatalog(q)
        if root is not None:
            _store(cat, _path(q, root))
    _MEMORY[q] = cat
    return cat


def _store(cat: RepCatalog, path: Path) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "wb") as fh:
            pickle.dump(cat, fh)
        os.replace(tmp, path)
    except OSError as exc:
        log.warning("could not write cache entry %s: %s", path, exc)


def clear_memory() -> None:
    _MEMORY.clear()
