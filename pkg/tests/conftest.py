from __future__ import annotations

from pathlib import Path

import pytest

from clsfront.config import default_pipeline

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"

# (number, description, passed, detail) for the acceptance summary
CRITERIA: list[tuple[int, str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok, detail in sorted(CRITERIA):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}  {desc}  ({detail})")


@pytest.fixture(scope="session")
def pipeline():
    return default_pipeline()


@pytest.fixture(scope="session")
def frontend(pipeline):
    return pipeline.frontend


@pytest.fixture(scope="session")
def inv(pipeline):
    return pipeline.inventory


def corpus_files() -> list[tuple[str, Path]]:
    """(primary language, path) for every corpus fixture; the language prefixes the file name."""
    return [(p.name.split("__")[0], p) for p in sorted(CORPUS.glob("*.txt"))]
