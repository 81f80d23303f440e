#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import hashlib
import json
import logging
import os
import pickle
import tempfile
from collections import Counter
from pathlib import Path
from typing import Any, Callable, Dict, Union

logger = logging.getLogger(__name__)

# Units of engine work performed in this process (e.g. ``group_tasks``, ``instances_checked``).
ENGINE_COUNTERS: Counter = Counter()


class ResultCache:
    """Advisory on-disk cache of computed results, one pickle file per key.

    Keys are the SHA-256 of the engine version, the group fingerprint, an
    operation label and its parameters, so results of another engine version
    are never reused. Removing the directory never changes results.

    Attributes:
        directory (Path): Directory holding the pickle files.
        engine_version (str): Version mixed into every key.
        hits (int): Lookups answered from disk.
        misses (int): Lookups that had to compute.
    """

    def __init__(self, directory: Union[Path, str], engine_version: str) -> None:
        self.directory = Path(directory)
        self.engine_version = engine_version
        self.hits = 0
        self.misses = 0

    def key(self, fingerprint: str, label: str, parameters: Dict) -> str:
        payload = json.dumps([self.engine_version, fingerprint, label, parameters], sort_keys=True, default=str)
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()

    def _path(self, key: str) -> Path:
        return self.directory / key[:2] / f"{key}.pkl"

    def load(self, key: str) -> Any:
        """The cached value, or None when absent or unreadable."""
        path = self._path(key)
        if not path.exists():
            return None
        try:
            with open(path, 'rb') as fp:
                return pickle.load(fp)
        except (OSError, pickle.UnpicklingError, EOFError) as e:
            logger.warning("ignoring unreadable cache entry %s: %s", path, e)
            return None

    def store(self, key: str, value: Any) -> None:
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, 'wb') as fp:
                pickle.dump(value, fp, protocol=pickle.HIGHEST_PROTOCOL)
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise

    def get_or_compute(self, fingerprint: str, label: str, parameters: Dict, factory: Callable[[], Any]) -> Any:
        key = self.key(fingerprint, label, parameters)
        value = self.load(key)
        if value is not None:
            self.hits += 1
            return value
        self.misses += 1
        value = factory()
        self.store(key, value)
        return value

    def stats(self) -> Dict[str, int]:
        return {'hits': self.hits, 'misses': self.misses}
