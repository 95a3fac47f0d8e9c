import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from gbwt.orderings import OrderingScheme  # noqa: E402

EXAMPLE_TEXT = b"aabaaabac"


@pytest.fixture
def text():
    return EXAMPLE_TEXT


@pytest.fixture
def example_scheme():
    return OrderingScheme.explicit("abc", {"": "bac", "a": "cab", "aa": "cba"})


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
