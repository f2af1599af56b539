from pathlib import Path

import pytest

from bbjsj import SimplicialGraph, load_graph

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

GLUED_TRIANGLES_EDGES = [("1", "2"), ("1", "3"), ("2", "3"), ("2", "5"), ("3", "5"),
                 ("2", "4"), ("4", "5"), ("3", "6"), ("5", "6")]
# the square a b c d with the diagonal a c
KITE_EDGES = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("c", "d")]


def complete(n):
    names = [str(i) for i in range(n)]
    return SimplicialGraph(names, [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    names = [f"v{i}" for i in range(n)]
    return SimplicialGraph(names, [(names[i], names[(i + 1) % n]) for i in range(n)])


def path(n):
    names = [f"p{i}" for i in range(n)]
    return SimplicialGraph(names, [(names[i], names[i + 1]) for i in range(n - 1)])


@pytest.fixture
def glued_triangles():
    return load_graph(DATA / "glued_triangles.g")


@pytest.fixture
def kite():
    return SimplicialGraph("abcd", KITE_EDGES)


# acceptance bookkeeping: tests tagged with @pytest.mark.criterion(k) feed a
# one-line-per-criterion summary at the end of the run

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    k = getattr(report, "criterion", None)
    if k is None:
        return
    _CRITERIA.setdefault(k, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep.criterion = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        ok = all(_CRITERIA[k])
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} ({len(_CRITERIA[k])} tests)")
