"""Shared fixtures: bundled desk-scale dataset paths."""

from pathlib import Path

import pytest

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR


@pytest.fixture(scope="session")
def gold_corpus_path():
    return DATA_DIR / "gold_pairs.conll"


@pytest.fixture(scope="session")
def reviews_path():
    return DATA_DIR / "reviews.jsonl"


@pytest.fixture(scope="session")
def services_path():
    return DATA_DIR / "services.jsonl"


@pytest.fixture(scope="session")
def queries_path():
    return DATA_DIR / "queries.tsv"


@pytest.fixture(scope="session")
def judgments_path():
    return DATA_DIR / "judgments.tsv"


@pytest.fixture(scope="session")
def vectors_path():
    return DATA_DIR / "vectors.txt"
