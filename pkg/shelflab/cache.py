"""Caching directory for computed results."""
import hashlib
import logging
import os
from pathlib import Path

from typing import Callable


class Cache:
    """Caching directory for rendered results, keyed by md5 of the request."""

    ENVIRONMENT_VARIABLE = "SHELFLAB_CACHE"
    ENCODING = "UTF-8"

    def __init__(self, path: Path | None = None):
        self.path = path

    @classmethod
    def from_environment(cls) -> "Cache":
        """Use $SHELFLAB_CACHE if set, otherwise cache nothing."""
        value = os.environ.get(cls.ENVIRONMENT_VARIABLE)
        return cls(Path(value) if value else None)

    GetContents = Callable[[], bytes]

    def name(self, get_contents: GetContents, suffix: str) -> Path | None:
        """Return where a result should be cached, if configured"""
        if self.path is None:
            return None

        md5 = hashlib.md5(get_contents()).hexdigest()
        return self.path / f"{md5}{suffix}"

    def get(self, cached: Path | None) -> str | None:
        """Cached text, or None on a miss"""
        if cached is None or not cached.is_file():
            return None
        logging.debug("Cache hit %s", cached.name)
        return cached.read_text(encoding=self.ENCODING)

    def put(self, text: str, cached: Path | None) -> None:
        """Cache text"""
        if cached is None:
            return
        logging.debug("Caching %s", cached.name)
        cached.parent.mkdir(parents=True, exist_ok=True)
        cached.write_text(text, encoding=self.ENCODING)
