import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one acceptance line; it is echoed now and again in the terminal summary."""
    def record(line):
        print(line)
        ACCEPTANCE_LINES.append(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
