"""Shared fixtures."""
from pathlib import Path
import typing as t

import pytest

from shelflab.cayley import ENCODING
from shelflab.cayley import format_cayley
from shelflab.magma import FiniteMagma
from shelflab.magma import make_magma


# Not right self-distributive: (0*1)*0 = 1 but (0*0)*(1*0) = 0.
NOT_A_SHELF = make_magma(2, [[1, 0], [0, 0]])


@pytest.fixture
def write_cay(tmp_path: Path) -> t.Callable[[FiniteMagma, str], Path]:
    """Write a magma to a .cay file under tmp_path."""

    def write(magma: FiniteMagma, name: str = "input.cay") -> Path:
        path = tmp_path / name
        path.write_text(format_cayley(magma), encoding=ENCODING)
        return path

    return write


@pytest.fixture
def isolated(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Run in an empty directory with no results cache configured."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("SHELFLAB_CACHE", raising=False)
    return tmp_path
