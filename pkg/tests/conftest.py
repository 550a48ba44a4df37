"""Fixtures partagées des tests."""

import os
from pathlib import Path

import pytest

from src.config import ENV_PREFIX, reset_settings
from src.continued_fractions.expansion import SurdExpansion, expand_sqrt

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Configuration par défaut, indépendante de l'environnement du poste."""
    for name in list(os.environ):
        if name.startswith(ENV_PREFIX):
            monkeypatch.delenv(name)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def sqrt21() -> SurdExpansion:
    return expand_sqrt(21)


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
