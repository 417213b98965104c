import pytest

from cordial.graphs import Digraph
from cordial.labelling import VertexLabelling

ACCEPTANCE_LINES: list[str] = []

# A 5-tournament with a cordial labelling, lambda (3, 3, 4).
SAMPLE5_ARCS = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (0, 2), (4, 2), (3, 0), (3, 1), (0, 4)]
SAMPLE5_LABELS = (0, 0, 1, 1, 0)
SAMPLE5_ARC_LABELS = {
    (0, 1): 0, (1, 2): 1, (2, 3): 0, (3, 4): -1, (1, 4): 0,
    (0, 2): 1, (4, 2): 1, (3, 0): -1, (3, 1): -1, (0, 4): 0,
}


@pytest.fixture
def sample5():
    return Digraph(5, frozenset(SAMPLE5_ARCS)), VertexLabelling(SAMPLE5_LABELS)


@pytest.fixture
def record():
    def _record(criterion: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}".rstrip())

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
