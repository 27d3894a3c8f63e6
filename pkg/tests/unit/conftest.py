"""Pytest configuration and fixtures."""

import os
import sys
from pathlib import Path
from unittest.mock import patch

import pytest

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.config import settings


@pytest.fixture(autouse=True)
def mock_environment(tmp_path):
    """Keep tests independent of any local .env or exported settings."""
    env_vars = {
        "DIVPOLY_ENVIRONMENT": "development",
        "DIVPOLY_LOG_LEVEL": "WARNING",
    }
    with patch.dict(os.environ, env_vars):
        with patch.object(settings, "output_dir", str(tmp_path / "output")):
            yield


@pytest.fixture
def l6_coefficients():
    """Centred coefficients of L_6(q) / q^5 for k = -5..5."""
    return [1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1]


@pytest.fixture
def p6_coefficients():
    """Centred coefficients of P_6(q) / q^5 for k = -5..5."""
    return [1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1]


@pytest.fixture
def a002324_prefix():
    """A002324(1..20)."""
    return [1, 0, 1, 1, 0, 0, 2, 0, 1, 0, 0, 1, 2, 0, 0, 1, 0, 0, 2, 0]


@pytest.fixture
def a096936_values():
    """Selected A096936 values, r_{1,0,3}(n) / 2, checked by hand."""
    return {1: 1, 2: 0, 3: 1, 4: 3, 5: 0, 6: 0, 7: 2, 8: 0, 12: 3, 16: 3}


@pytest.fixture
def bfile_factory(tmp_path):
    """Write b-file text to a temporary file and return its path."""

    def _write(text: str, name: str = "b.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write
