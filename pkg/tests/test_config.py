"""
Configuration loading: defaults, environment overrides and the corpus location
"""
from pathlib import Path

from hpfold.config import Settings, get_settings, settings
from hpfold.search import SearchLimits


def test_defaults(monkeypatch):
    for name in ("SEARCH_WORKERS", "SEARCH_MAX_NODES", "CORPUS_DIR", "LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    fresh = Settings(_env_file=None)
    assert fresh.APP_NAME == "hpfold"
    assert fresh.SEARCH_WORKERS == 1
    assert fresh.LOG_LEVEL == "INFO"
    assert fresh.DECODE_KEYS == "adefsw"


def test_environment_override(monkeypatch):
    monkeypatch.setenv("SEARCH_MAX_NODES", "1234")
    monkeypatch.setenv("SVG_PITCH", "30")
    fresh = get_settings()
    assert fresh.SEARCH_MAX_NODES == 1234
    assert fresh.SVG_PITCH == 30


def test_corpus_path_default(monkeypatch):
    monkeypatch.delenv("CORPUS_DIR", raising=False)
    path = Settings(_env_file=None).corpus_path
    assert path.name == "data"
    assert (path / "manifest.json").is_file()


def test_corpus_dir_override(monkeypatch, tmp_path):
    monkeypatch.setenv("CORPUS_DIR", str(tmp_path))
    assert Settings(_env_file=None).corpus_path == Path(tmp_path)


def test_limits_follow_settings(monkeypatch):
    monkeypatch.setattr(settings, "SEARCH_MAX_NODES", 77)
    monkeypatch.setattr(settings, "SEARCH_MAX_SECONDS", 1.5)
    limits = SearchLimits()
    assert (limits.max_nodes, limits.max_seconds, limits.workers) == (77, 1.5, 1)
