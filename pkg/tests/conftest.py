import logging

import pytest

from frames.exactfield import make_context


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    """Keep the error log out of the repo and leave log handling to pytest."""
    monkeypatch.setenv("FRAMES_ERROR_LOG", str(tmp_path / "errors.log"))
    for name in ("FRAMES_PRIME", "FRAMES_SEED", "FRAMES_TRIALS", "FRAMES_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr(logging.getLogger(), "_frames_configured", True, raising=False)


@pytest.fixture(scope="session")
def ctx():
    return make_context()


@pytest.fixture(scope="session")
def small_ctx():
    return make_context(13)


@pytest.fixture
def edge_file(tmp_path):
    def write(text, name="graph.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
