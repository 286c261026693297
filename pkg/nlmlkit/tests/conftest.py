"""
Shared test fixtures: the demo lexicon, golden NLML files and scratch stores.
"""

import os
import sys

import pytest

# Add project root to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from nlmlkit.src.core.lexicon import load_lexicon  # noqa: E402
from nlmlkit.src.database.store import NlmlStore  # noqa: E402

REPO_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))
LEXICON_PATH = os.path.join(REPO_ROOT, "lexicon", "en-demo.lex")
FIXTURES_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture(scope="session")
def lexicon():
    """The demo lexicon, loaded once per run"""
    return load_lexicon(LEXICON_PATH)


@pytest.fixture(scope="session")
def lexicon_path():
    return LEXICON_PATH


@pytest.fixture(scope="session")
def golden():
    """Golden NLML strings by fixture name, e.g. golden["i_come"]"""
    found = {}
    for name in os.listdir(FIXTURES_DIR):
        if name.endswith(".nlml"):
            with open(os.path.join(FIXTURES_DIR, name), "r", encoding="utf-8") as f:
                found[name[:-len(".nlml")]] = f.read().strip()
    return found


@pytest.fixture(scope="session")
def do_support_rows():
    """(tense, numb, pers, form) rows of the do-support oracle"""
    with open(os.path.join(FIXTURES_DIR, "do_support.tsv"), "r", encoding="utf-8") as f:
        lines = f.read().splitlines()
    return [tuple(line.split("\t")) for line in lines[1:] if line.strip()]


@pytest.fixture
def store_path(tmp_path):
    return str(tmp_path / "nldb.tsv")


@pytest.fixture
def store(store_path):
    return NlmlStore(store_path)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep NLMLKIT_* variables of the calling shell out of the tests"""
    for variable in ("NLMLKIT_LEXICON", "NLMLKIT_STORE", "NLMLKIT_LOG_LEVEL"):
        monkeypatch.delenv(variable, raising=False)
