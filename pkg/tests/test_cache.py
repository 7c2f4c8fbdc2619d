import json
import os
import threading

from artifact import cache


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("JACOBI_CACHE_DIR", str(tmp_path))
    calls = []

    def compute():
        calls.append(1)
        return {"b": (1, 2), "a": "x"}

    cold = cache.cached("mod", {"p": 1}, compute)
    warm = cache.cached("mod", {"p": 1}, compute)
    assert cold == warm == {"a": "x", "b": [1, 2]}
    assert len(calls) == 1
    assert json.dumps(cold, sort_keys=True) == json.dumps(warm, sort_keys=True)


def test_cache_disabled_and_keys(tmp_path, monkeypatch):
    monkeypatch.setenv("JACOBI_CACHE_DIR", str(tmp_path))
    cache.cached("mod", {"p": 1}, lambda: 1, enabled=False)
    assert not any(tmp_path.iterdir())
    assert cache.cache_key("mod", {"p": 1}) != cache.cache_key("mod", {"p": 2})
    assert cache.cache_key("mod", {"p": 1}) != cache.cache_key("other", {"p": 1})


def test_convention_hash_tracks_ledger(monkeypatch):
    before = cache.convention_hash()
    key = cache.cache_key("mod", {})
    monkeypatch.setitem(cache.CONVENTIONS, "stu", "changed")
    assert cache.convention_hash() != before
    assert cache.cache_key("mod", {}) != key


def test_corrupt_entry_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv("JACOBI_CACHE_DIR", str(tmp_path))
    path = tmp_path / f"{cache.cache_key('mod', {})}.json"
    path.write_text("{not json")
    assert cache.cached("mod", {}, lambda: [3]) == [3]
    assert json.loads(path.read_text()) == [3]


def test_concurrent_writes_leave_no_partial_files(tmp_path, monkeypatch):
    monkeypatch.setenv("JACOBI_CACHE_DIR", str(tmp_path))
    value = {"rows": list(range(2000))}
    threads = [threading.Thread(target=cache.store, args=("mod", {"q": 1}, value)) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert cache.load("mod", {"q": 1}) == value
    assert [p for p in os.listdir(tmp_path) if p.endswith(".tmp")] == []
