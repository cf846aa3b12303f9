"""Test-session plumbing: collects acceptance verdict lines and prints
them in a dedicated section of the terminal summary, where they are
visible under any capture mode.
"""

import pytest

_acceptance_lines = []


@pytest.fixture
def acceptance_log():
    """Callable that records one acceptance verdict line."""
    return _acceptance_lines.append


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
