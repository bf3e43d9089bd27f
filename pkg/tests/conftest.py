import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from distpres.graph import build_graph  # noqa: E402


@pytest.fixture
def c5():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def bowtie():
    # two triangles sharing vertex 2
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request, capsys):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines: list[str] = []
    yield lines.append
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    detail = "; ".join(lines)
    line = f"{request.node.name}: {'FAIL' if failed else 'PASS'}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print(f"\n{line}")


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
