import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import fig3_graph, named_graphs  # noqa: E402


@pytest.fixture(scope="session")
def fig3():
    return fig3_graph()


@pytest.fixture(scope="session")
def fixtures():
    """Named graphs the invariant tests sweep over."""
    return named_graphs()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
