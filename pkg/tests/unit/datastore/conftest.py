"""
Pytest configuration and fixtures for datastore layer tests.

Files are written under pytest's tmp_path, so every test starts from an
empty directory.
"""

from pathlib import Path

import pytest

from app.datastore import flatfile
from app.model.workload import WorkloadInstance


@pytest.fixture
def write_file(tmp_path):
    """Write ``text`` to ``tmp_path / name`` and return the path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def demo_prefix(tmp_path, demo: WorkloadInstance) -> Path:
    """The nine-task example as ``demo.etc`` and ``demo.dep``, without a manifest."""
    prefix = tmp_path / "demo"
    flatfile.write_etc_file(tmp_path / "demo.etc", demo.etc)
    flatfile.write_dep_file(tmp_path / "demo.dep", demo.dag)
    return prefix
