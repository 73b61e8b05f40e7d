import os
import shutil
import sys
from pathlib import Path
from unittest.mock import patch

import pytest

from charclass.config import get_settings
from charclass.config.settings import PACKAGE_DATA_DIR, Settings
from charclass.rings import load_even_presentation
import charclass.gysin.delta  # noqa: F401  (ensure module is in sys.modules)

BGO2_FILE = PACKAGE_DATA_DIR / "bgo2.json"


@pytest.fixture(autouse=True)
def isolated_env(tmp_path_factory, monkeypatch):
    """Run every test away from any config.yaml / .env and with no CHARCLASS_ variables."""
    for key in list(os.environ):
        if key.startswith("CHARCLASS_"):
            monkeypatch.delenv(key)
    monkeypatch.chdir(tmp_path_factory.mktemp("cwd"))
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def data_dir(tmp_path) -> Path:
    """A data directory holding a copy of the shipped BGO2 file."""
    target = tmp_path / "data"
    target.mkdir()
    shutil.copy(BGO2_FILE, target / "bgo2.json")
    return target


@pytest.fixture
def test_settings(data_dir, tmp_path) -> Settings:
    return Settings(
        data_dir=data_dir,
        degree_cap=12,
        log_level="ERROR",
        log_file=tmp_path / "logs" / "test.log",
    )


@pytest.fixture
def mock_settings(test_settings):
    """Patch get_settings everywhere the CLI and library look it up."""
    with patch("charclass.config.get_settings", return_value=test_settings), patch(
        "charclass.cli.get_settings", return_value=test_settings
    ), patch("charclass.rings.even.get_settings", return_value=test_settings), patch.object(
        # charclass.gysin re-exports the function `delta`, shadowing the submodule
        # attribute, so resolve the module object explicitly.
        sys.modules["charclass.gysin.delta"], "get_settings", return_value=test_settings
    ):
        yield test_settings


@pytest.fixture(scope="session")
def bgo2():
    """The shipped rank-2 presentation, loaded once."""
    return load_even_presentation(BGO2_FILE, degree_cap=12)
