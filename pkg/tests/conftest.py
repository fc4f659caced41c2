from __future__ import annotations

import pathlib

import pytest
from hypothesis import settings

from dgcipher import build_reference_table, example_keyset

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def corpus_path() -> pathlib.Path:
    return FIXTURES / "turkish_corpus.txt"


@pytest.fixture(scope="session")
def corpus_text(corpus_path: pathlib.Path) -> str:
    return corpus_path.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def reference(corpus_text: str):
    return build_reference_table(corpus_text)


@pytest.fixture(scope="session")
def keyset():
    return example_keyset()
