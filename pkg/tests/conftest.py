import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


class _Criterion:
    def __init__(self, config, number, title):
        self.config, self.number, self.title = config, number, title
        self.notes = []

    def note(self, text):
        self.notes.append(text)

    def __enter__(self):
        import time
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        import time
        self.elapsed = time.perf_counter() - self._t0
        status = "PASS" if exc_type is None else "FAIL"
        extra = "; ".join(self.notes)
        line = f"criterion {self.number}: {status} ({self.elapsed:.2f} s) {self.title}" + (f" [{extra}]" if extra else "")
        self.config._acceptance_lines.append((self.number, line))
        return False


@pytest.fixture
def criterion(request):
    def make(number, title):
        return _Criterion(request.config, number, title)
    return make


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, config):
    lines = sorted(config._acceptance_lines)
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in lines:
            terminalreporter.write_line(line)
