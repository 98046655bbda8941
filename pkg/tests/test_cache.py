"""Results cache."""
import hashlib

from shelflab.cache import Cache


def test_no_directory_caches_nothing():
    cache = Cache()
    cached = cache.name(lambda: b"request", ".out")
    assert cached is None
    cache.put("text", cached)
    assert cache.get(cached) is None


def test_round_trip(tmp_path):
    cache = Cache(tmp_path / "cache")
    cached = cache.name(lambda: b"request", ".out")
    assert cached == tmp_path / "cache" / (hashlib.md5(b"request").hexdigest() + ".out")
    assert cache.get(cached) is None
    cache.put("result\n", cached)
    assert cache.get(cached) == "result\n"


def test_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(Cache.ENVIRONMENT_VARIABLE, str(tmp_path))
    assert Cache.from_environment().path == tmp_path
    monkeypatch.delenv(Cache.ENVIRONMENT_VARIABLE)
    assert Cache.from_environment().path is None
    monkeypatch.setenv(Cache.ENVIRONMENT_VARIABLE, "")
    assert Cache.from_environment().path is None
