from pathlib import Path

import pytest

from rgraph.diagram import parse_diagram

DATA = Path(__file__).resolve().parents[1] / "src" / "rgraph" / "data"
TABLE = DATA / "gallery"
REFERENCE = DATA / "reference"

# filled by the acceptance tests, printed at the end of the run
CRITERIA: list[str] = []


def load(path):
    return parse_diagram(Path(path).read_text())


def table(name):
    return load(TABLE / f"{name}.pd")


def reference(name):
    return load(REFERENCE / f"{name}.pd")


@pytest.fixture
def criterion():
    """Record one acceptance line; call with (number, passed, detail)."""

    def record(number, passed, detail=""):
        CRITERIA.append(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip())

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
