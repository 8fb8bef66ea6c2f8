from pathlib import Path

import pytest

from hpfold.config import settings
from hpfold.folding import Fold
from hpfold.words import Word, rect_family

DATA_DIR = Path(__file__).resolve().parent.parent / "hpfold" / "corpus" / "data"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive searches and sweeps that take minutes")


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def corpus_file(data_dir):
    def _path(name: str) -> str:
        return str(data_dir / name)
    return _path


@pytest.fixture
def rect_k0():
    """rect_family(0) with its fold"""
    word, moves = rect_family(0)
    return Fold(kind="rect2d", moves=moves), word


@pytest.fixture
def square_0000():
    return Fold(kind="rect2d", moves="uld"), Word.parse("0000")


@pytest.fixture(autouse=True)
def _single_worker(monkeypatch):
    monkeypatch.setattr(settings, "SEARCH_WORKERS", 1)
