import pytest

from chaosraga.raga import reset_registry


@pytest.fixture(autouse=True)
def _clean_registry():
    yield
    reset_registry()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
