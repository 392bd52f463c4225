from __future__ import annotations

from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return DATA_DIR / "corpus"


@pytest.fixture(scope="session")
def corpus_files(corpus_dir: Path) -> list[Path]:
    files = sorted(p for p in corpus_dir.iterdir() if p.is_file())
    assert len(files) >= 5, "corpus must hold at least five files"
    return files


@pytest.fixture(scope="session")
def invalid_dir() -> Path:
    return DATA_DIR / "invalid"


def pytest_runtest_logreport(report):
    """One visible verdict line per acceptance check."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    print(f"\n[ACCEPTANCE] {name}: {'PASS' if report.passed else 'FAIL'}")
